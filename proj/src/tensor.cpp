// Copyright 2026 The entmon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entmon/tensor.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

#include "entmon/errors.hpp"

namespace entmon {

namespace {

std::string shape_str(std::span<const std::size_t> shape) {
    std::ostringstream out;
    out << '[';
    for (std::size_t k = 0; k < shape.size(); k++) {
        out << (k ? "," : "") << shape[k];
    }
    out << ']';
    return out.str();
}

void require_same_shape(const DenseTensor &a, const DenseTensor &b, const char *what) {
    if (a.shape() != b.shape()) {
        throw ShapeError(std::string(what) + ": shape " + shape_str(a.shape()) + " vs " + shape_str(b.shape()));
    }
}

// Advances a row-major odometer; returns false after the last index.
bool next_index(std::vector<std::size_t> &index, std::span<const std::size_t> shape) {
    for (std::size_t k = index.size(); k-- > 0;) {
        if (++index[k] < shape[k]) {
            return true;
        }
        index[k] = 0;
    }
    return false;
}

struct LabeledTensor {
    DenseTensor tensor;
    std::vector<Label> labels;
};

// Sums over repeated labels inside a single term.
LabeledTensor reduce_diagonals(const DenseTensor &t, const std::vector<Label> &labels) {
    std::vector<Label> unique;
    std::vector<std::size_t> slot(labels.size());
    for (std::size_t k = 0; k < labels.size(); k++) {
        auto it = std::find(unique.begin(), unique.end(), labels[k]);
        slot[k] = static_cast<std::size_t>(it - unique.begin());
        if (it == unique.end()) {
            unique.push_back(labels[k]);
        }
    }
    if (unique.size() == labels.size()) {
        return {t, labels};
    }

    std::vector<std::size_t> free_pos;
    Shape out_shape;
    std::vector<int> seen(unique.size(), 0);
    for (std::size_t u = 0; u < unique.size(); u++) {
        auto n = std::count(labels.begin(), labels.end(), unique[u]);
        if (n == 1) {
            free_pos.push_back(u);
            auto k = static_cast<std::size_t>(std::find(labels.begin(), labels.end(), unique[u]) - labels.begin());
            out_shape.push_back(t.extent(k));
        }
    }
    std::vector<Label> out_labels;
    for (auto u : free_pos) {
        out_labels.push_back(unique[u]);
    }

    DenseTensor out(out_shape);
    auto out_strides = out.strides();
    std::vector<std::size_t> index(t.rank(), 0);
    std::vector<std::size_t> value(unique.size());
    std::size_t flat = 0;
    do {
        std::fill(value.begin(), value.end(), SIZE_MAX);
        bool consistent = true;
        for (std::size_t k = 0; k < labels.size() && consistent; k++) {
            auto &v = value[slot[k]];
            if (v == SIZE_MAX) {
                v = index[k];
            } else if (v != index[k]) {
                consistent = false;
            }
        }
        if (consistent) {
            std::size_t target = 0;
            for (std::size_t f = 0; f < free_pos.size(); f++) {
                target += value[free_pos[f]] * out_strides[f];
            }
            out[target] += t[flat];
        }
        flat++;
    } while (next_index(index, t.shape()));
    return {std::move(out), std::move(out_labels)};
}

LabeledTensor contract_pair(const LabeledTensor &a, const LabeledTensor &b) {
    std::vector<std::size_t> a_free, a_shared, b_free, b_shared;
    for (std::size_t k = 0; k < a.labels.size(); k++) {
        auto it = std::find(b.labels.begin(), b.labels.end(), a.labels[k]);
        if (it == b.labels.end()) {
            a_free.push_back(k);
        } else {
            a_shared.push_back(k);
            b_shared.push_back(static_cast<std::size_t>(it - b.labels.begin()));
        }
    }
    for (std::size_t k = 0; k < b.labels.size(); k++) {
        if (std::find(b_shared.begin(), b_shared.end(), k) == b_shared.end()) {
            b_free.push_back(k);
        }
    }

    std::vector<std::size_t> a_perm = a_free;
    a_perm.insert(a_perm.end(), a_shared.begin(), a_shared.end());
    std::vector<std::size_t> b_perm = b_shared;
    b_perm.insert(b_perm.end(), b_free.begin(), b_free.end());
    DenseTensor ap = permute_axes(a.tensor, a_perm);
    DenseTensor bp = permute_axes(b.tensor, b_perm);

    Shape out_shape;
    std::vector<Label> out_labels;
    std::size_t rows = 1, inner_dim = 1, cols = 1;
    for (auto k : a_free) {
        out_shape.push_back(a.tensor.extent(k));
        out_labels.push_back(a.labels[k]);
        rows *= a.tensor.extent(k);
    }
    for (auto k : a_shared) {
        inner_dim *= a.tensor.extent(k);
    }
    for (auto k : b_free) {
        out_shape.push_back(b.tensor.extent(k));
        out_labels.push_back(b.labels[k]);
        cols *= b.tensor.extent(k);
    }
    DenseTensor out(out_shape);
    for (std::size_t i = 0; i < rows; i++) {
        for (std::size_t k = 0; k < inner_dim; k++) {
            complex aik = ap[i * inner_dim + k];
            if (aik == complex{}) {
                continue;
            }
            const complex *brow = bp.data().data() + k * cols;
            complex *orow = out.data().data() + i * cols;
            for (std::size_t j = 0; j < cols; j++) {
                orow[j] += aik * brow[j];
            }
        }
    }
    return {std::move(out), std::move(out_labels)};
}

}  // namespace

std::size_t checked_entry_count(std::span<const std::size_t> shape) {
    std::size_t n = 1;
    for (auto e : shape) {
        if (e == 0) {
            throw ShapeError("tensor extents must be >= 1, got " + shape_str(shape));
        }
        if (n > kMaxTensorEntries / e) {
            throw CapacityError("tensor of shape " + shape_str(shape) + " exceeds the entry cap of " +
                                std::to_string(kMaxTensorEntries));
        }
        n *= e;
    }
    return n;
}

DenseTensor::DenseTensor() : data_(1) {}

DenseTensor::DenseTensor(Shape shape) : shape_(std::move(shape)), data_(checked_entry_count(shape_)) {}

DenseTensor::DenseTensor(Shape shape, std::vector<complex> data) : shape_(std::move(shape)), data_(std::move(data)) {
    if (data_.size() != checked_entry_count(shape_)) {
        throw ShapeError("tensor of shape " + shape_str(shape_) + " needs " + std::to_string(checked_entry_count(shape_)) +
                         " entries, got " + std::to_string(data_.size()));
    }
}

DenseTensor DenseTensor::scalar(complex value) { return DenseTensor({}, {value}); }

DenseTensor DenseTensor::vector(std::vector<complex> values) {
    Shape shape{values.size()};
    return DenseTensor(std::move(shape), std::move(values));
}

DenseTensor DenseTensor::matrix(std::size_t n, std::vector<complex> row_major) {
    return DenseTensor({n, n}, std::move(row_major));
}

DenseTensor DenseTensor::identity(std::size_t n) {
    DenseTensor t({n, n});
    for (std::size_t k = 0; k < n; k++) {
        t[k * n + k] = 1.0;
    }
    return t;
}

std::vector<std::size_t> DenseTensor::strides() const {
    std::vector<std::size_t> s(shape_.size());
    std::size_t acc = 1;
    for (std::size_t k = shape_.size(); k-- > 0;) {
        s[k] = acc;
        acc *= shape_[k];
    }
    return s;
}

std::size_t DenseTensor::flat_index(std::span<const std::size_t> index) const {
    if (index.size() != shape_.size()) {
        throw ShapeError("index of rank " + std::to_string(index.size()) + " into tensor of rank " +
                         std::to_string(shape_.size()));
    }
    std::size_t flat = 0;
    for (std::size_t k = 0; k < index.size(); k++) {
        if (index[k] >= shape_[k]) {
            throw ShapeError("index out of range on axis " + std::to_string(k));
        }
        flat = flat * shape_[k] + index[k];
    }
    return flat;
}

std::vector<std::size_t> DenseTensor::multi_index(std::size_t flat) const {
    std::vector<std::size_t> index(shape_.size());
    for (std::size_t k = shape_.size(); k-- > 0;) {
        index[k] = flat % shape_[k];
        flat /= shape_[k];
    }
    return index;
}

complex &DenseTensor::at(std::span<const std::size_t> index) { return data_[flat_index(index)]; }

const complex &DenseTensor::at(std::span<const std::size_t> index) const { return data_[flat_index(index)]; }

DenseTensor &DenseTensor::operator+=(const DenseTensor &other) {
    require_same_shape(*this, other, "add");
    for (std::size_t k = 0; k < data_.size(); k++) {
        data_[k] += other.data_[k];
    }
    return *this;
}

DenseTensor &DenseTensor::operator-=(const DenseTensor &other) {
    require_same_shape(*this, other, "subtract");
    for (std::size_t k = 0; k < data_.size(); k++) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

DenseTensor &DenseTensor::operator*=(complex factor) {
    for (auto &v : data_) {
        v *= factor;
    }
    return *this;
}

DenseTensor operator+(DenseTensor a, const DenseTensor &b) { return a += b; }
DenseTensor operator-(DenseTensor a, const DenseTensor &b) { return a -= b; }
DenseTensor operator*(complex factor, DenseTensor t) { return t *= factor; }

DenseTensor outer(const DenseTensor &a, const DenseTensor &b) {
    Shape shape = a.shape();
    shape.insert(shape.end(), b.shape().begin(), b.shape().end());
    DenseTensor out(shape);
    std::size_t nb = b.size();
    for (std::size_t i = 0; i < a.size(); i++) {
        for (std::size_t j = 0; j < nb; j++) {
            out[i * nb + j] = a[i] * b[j];
        }
    }
    return out;
}

complex inner(const DenseTensor &a, const DenseTensor &b) {
    require_same_shape(a, b, "inner");
    complex acc{};
    for (std::size_t k = 0; k < a.size(); k++) {
        acc += std::conj(a[k]) * b[k];
    }
    return acc;
}

double norm(const DenseTensor &t) {
    double acc = 0;
    for (auto v : t.data()) {
        acc += std::norm(v);
    }
    return std::sqrt(acc);
}

double max_abs_diff(const DenseTensor &a, const DenseTensor &b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0;
    for (std::size_t k = 0; k < a.size(); k++) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

DenseTensor permute_axes(const DenseTensor &t, std::span<const std::size_t> perm) {
    std::size_t r = t.rank();
    if (perm.size() != r) {
        throw ShapeError("permutation of length " + std::to_string(perm.size()) + " for rank " + std::to_string(r));
    }
    std::vector<bool> used(r, false);
    for (auto p : perm) {
        if (p >= r || used[p]) {
            throw ShapeError("invalid axis permutation");
        }
        used[p] = true;
    }
    bool identity = true;
    for (std::size_t k = 0; k < r; k++) {
        identity = identity && perm[k] == k;
    }
    if (identity) {
        return t;
    }

    Shape out_shape(r);
    auto src_strides = t.strides();
    std::vector<std::size_t> step(r);
    for (std::size_t k = 0; k < r; k++) {
        out_shape[k] = t.extent(perm[k]);
        step[k] = src_strides[perm[k]];
    }
    DenseTensor out(out_shape);
    std::vector<std::size_t> index(r, 0);
    std::size_t src = 0;
    for (std::size_t flat = 0; flat < out.size(); flat++) {
        out[flat] = t[src];
        for (std::size_t k = r; k-- > 0;) {
            if (++index[k] < out_shape[k]) {
                src += step[k];
                break;
            }
            src -= (out_shape[k] - 1) * step[k];
            index[k] = 0;
        }
    }
    return out;
}

DenseTensor permute_axes(const DenseTensor &t, std::initializer_list<std::size_t> perm) {
    return permute_axes(t, std::span<const std::size_t>(perm.begin(), perm.size()));
}

DenseTensor apply_matrix(const DenseTensor &t, std::size_t axis, const DenseTensor &matrix) {
    if (axis >= t.rank()) {
        throw ShapeError("axis " + std::to_string(axis) + " out of range for rank " + std::to_string(t.rank()));
    }
    std::size_t n = t.extent(axis);
    if (matrix.shape() != Shape{n, n}) {
        throw ShapeError("matrix of shape " + shape_str(matrix.shape()) + " on axis of extent " + std::to_string(n));
    }
    std::size_t inner_block = t.strides()[axis];
    std::size_t outer_count = t.size() / (inner_block * n);
    DenseTensor out(t.shape());
    for (std::size_t o = 0; o < outer_count; o++) {
        std::size_t base = o * n * inner_block;
        for (std::size_t i = 0; i < n; i++) {
            for (std::size_t j = 0; j < n; j++) {
                complex m = matrix[i * n + j];
                if (m == complex{}) {
                    continue;
                }
                for (std::size_t s = 0; s < inner_block; s++) {
                    out[base + i * inner_block + s] += m * t[base + j * inner_block + s];
                }
            }
        }
    }
    return out;
}

int permutation_sign(std::span<const std::size_t> perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); i++) {
        for (std::size_t j = i + 1; j < perm.size(); j++) {
            if (perm[i] > perm[j]) {
                sign = -sign;
            }
        }
    }
    return sign;
}

DenseTensor levi_civita(std::size_t n) {
    if (n < 2) {
        throw ShapeError("levi_civita needs n >= 2");
    }
    DenseTensor t(Shape(n, n));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        t.at(perm) = permutation_sign(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return t;
}

ContractionPlan ContractionPlan::parse(std::string_view einsum) {
    auto arrow = einsum.find("->");
    if (arrow == std::string_view::npos) {
        throw ParseError("einsum string needs '->'");
    }
    ContractionPlan plan;
    auto lhs = einsum.substr(0, arrow);
    auto to_label = [](char c) -> Label {
        if (!std::isalpha(static_cast<unsigned char>(c))) {
            throw ParseError(std::string("bad einsum label '") + c + "'");
        }
        return static_cast<Label>(c);
    };
    std::size_t term = 0;
    plan.inputs.push_back({term, {}});
    for (char c : lhs) {
        if (c == ',') {
            plan.inputs.push_back({++term, {}});
        } else if (c != ' ') {
            plan.inputs.back().labels.push_back(to_label(c));
        }
    }
    for (char c : einsum.substr(arrow + 2)) {
        if (c != ' ') {
            plan.output.push_back(to_label(c));
        }
    }
    return plan;
}

void validate(const ContractionPlan &plan, std::span<const DenseTensor> tensors) {
    std::map<Label, int> count;
    std::map<Label, std::size_t> extent;
    for (std::size_t t = 0; t < plan.inputs.size(); t++) {
        const auto &term = plan.inputs[t];
        if (term.tensor >= tensors.size()) {
            throw ShapeError("term " + std::to_string(t) + " refers to missing tensor " + std::to_string(term.tensor));
        }
        const auto &tensor = tensors[term.tensor];
        if (term.labels.size() != tensor.rank()) {
            throw ShapeError("term " + std::to_string(t) + " has " + std::to_string(term.labels.size()) +
                             " labels for a rank-" + std::to_string(tensor.rank()) + " tensor");
        }
        for (std::size_t k = 0; k < term.labels.size(); k++) {
            Label l = term.labels[k];
            count[l]++;
            auto [it, fresh] = extent.emplace(l, tensor.extent(k));
            if (!fresh && it->second != tensor.extent(k)) {
                throw ShapeError("label " + std::to_string(l) + " pairs extents " + std::to_string(it->second) +
                                 " and " + std::to_string(tensor.extent(k)));
            }
        }
    }
    std::map<Label, int> out_count;
    for (Label l : plan.output) {
        if (++out_count[l] > 1) {
            throw ShapeError("output label " + std::to_string(l) + " repeated");
        }
        auto it = count.find(l);
        if (it == count.end()) {
            throw ShapeError("output label " + std::to_string(l) + " does not occur in any input");
        }
        if (it->second != 1) {
            throw ShapeError("output label " + std::to_string(l) + " is summed");
        }
    }
    for (auto [l, n] : count) {
        if (n > 2) {
            throw ShapeError("label " + std::to_string(l) + " occurs " + std::to_string(n) + " times");
        }
        if (n == 1 && !out_count.contains(l)) {
            throw ShapeError("free label " + std::to_string(l) + " missing from output");
        }
    }
}

DenseTensor contract(const ContractionPlan &plan, std::span<const DenseTensor> tensors) {
    validate(plan, tensors);
    LabeledTensor acc{DenseTensor::scalar(1.0), {}};
    for (const auto &term : plan.inputs) {
        acc = contract_pair(acc, reduce_diagonals(tensors[term.tensor], term.labels));
    }
    std::vector<std::size_t> perm;
    for (Label l : plan.output) {
        perm.push_back(static_cast<std::size_t>(std::find(acc.labels.begin(), acc.labels.end(), l) - acc.labels.begin()));
    }
    return permute_axes(acc.tensor, perm);
}

DenseTensor contract(const ContractionPlan &plan, std::initializer_list<DenseTensor> tensors) {
    return contract(plan, std::span<const DenseTensor>(tensors.begin(), tensors.size()));
}

}  // namespace entmon
