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

#include "entmon/state.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "entmon/errors.hpp"

namespace entmon {

namespace {

void check_dims(const Shape &dims) {
    if (dims.empty()) {
        throw ShapeError("a state needs at least one party");
    }
    for (auto d : dims) {
        if (d < 2) {
            throw ShapeError("party dimensions must be >= 2");
        }
    }
}

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

PureState ghz_like(std::size_t m, std::size_t n) {
    Shape dims(m, n);
    DenseTensor amps(dims);
    double a = 1 / std::sqrt(static_cast<double>(n));
    for (std::size_t i = 0; i < n; i++) {
        std::vector<std::size_t> index(m, i);
        amps.at(index) = a;
    }
    return PureState(dims, std::move(amps));
}

}  // namespace

PureState::PureState(Shape dims, DenseTensor amps) : dims_(std::move(dims)), amps_(std::move(amps)) {
    check_dims(dims_);
    if (amps_.shape() != dims_) {
        throw ShapeError("amplitude tensor shape does not match party dimensions");
    }
    normalized_ = std::abs(entmon::norm(amps_) - 1) <= kNormalizedTolerance;
}

PureState PureState::normalized_copy() const {
    double n = norm();
    if (!(n > 0) || !std::isfinite(n)) {
        throw NormalizationError("cannot normalize a state of norm " + format_real(n));
    }
    DenseTensor a = amps_;
    a *= 1 / n;
    return PureState(dims_, std::move(a));
}

bool PureState::all_qubits() const {
    for (auto d : dims_) {
        if (d != 2) {
            return false;
        }
    }
    return true;
}

PureState product_state(std::span<const std::vector<complex>> locals) {
    if (locals.empty()) {
        throw ShapeError("product_state needs at least one local vector");
    }
    DenseTensor amps = DenseTensor::scalar(1.0);
    Shape dims;
    for (const auto &v : locals) {
        DenseTensor t = DenseTensor::vector(v);
        double n = norm(t);
        if (!(n > 0)) {
            throw NormalizationError("product_state: zero local vector");
        }
        t *= 1 / n;
        amps = outer(amps, t);
        dims.push_back(v.size());
    }
    return PureState(dims, std::move(amps));
}

PureState product_state(std::initializer_list<std::vector<complex>> locals) {
    return product_state(std::span<const std::vector<complex>>(locals.begin(), locals.size()));
}

PureState ghz(std::size_t m) {
    if (m < 2) {
        throw ShapeError("ghz needs m >= 2");
    }
    return ghz_like(m, 2);
}

PureState w_state(std::size_t m) {
    if (m < 2) {
        throw ShapeError("w state needs m >= 2");
    }
    Shape dims(m, 2);
    DenseTensor amps(dims);
    double a = 1 / std::sqrt(static_cast<double>(m));
    for (std::size_t j = 0; j < m; j++) {
        std::vector<std::size_t> index(m, 0);
        index[j] = 1;
        amps.at(index) = a;
    }
    return PureState(dims, std::move(amps));
}

PureState bell() { return ghz(2); }

PureState max_entangled_qudit(std::size_t n) {
    if (n < 2) {
        throw ShapeError("max_entangled_qudit needs n >= 2");
    }
    return ghz_like(2, n);
}

PureState random_state(const Shape &dims, Rng &rng) {
    check_dims(dims);
    DenseTensor amps(dims);
    for (auto &v : amps.data()) {
        v = rng.complex_normal();
    }
    return PureState(dims, std::move(amps)).normalized_copy();
}

PureState random_product_state(const Shape &dims, Rng &rng) {
    check_dims(dims);
    std::vector<std::vector<complex>> locals;
    for (auto d : dims) {
        std::vector<complex> v(d);
        for (auto &x : v) {
            x = rng.complex_normal();
        }
        locals.push_back(std::move(v));
    }
    return product_state(locals);
}

DenseTensor copies(const PureState &s, std::size_t q) {
    if (q < 1) {
        throw ShapeError("copies needs q >= 1");
    }
    Shape shape;
    for (std::size_t k = 0; k < q; k++) {
        shape.insert(shape.end(), s.dims().begin(), s.dims().end());
    }
    checked_entry_count(shape);
    DenseTensor out = s.amps();
    for (std::size_t k = 1; k < q; k++) {
        out = outer(out, s.amps());
    }
    return out;
}

LoadedState parse_state(std::string_view text, NormPolicy policy) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("state file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dims") || !doc.contains("amps")) {
        throw ParseError("state file needs 'dims' and 'amps' fields");
    }
    Shape dims;
    std::vector<complex> amps;
    try {
        for (const auto &d : doc.at("dims")) {
            if (!d.is_number_integer() || d.get<long long>() < 1) {
                throw ParseError("'dims' must hold positive integers");
            }
            dims.push_back(d.get<std::size_t>());
        }
        if (!doc.at("amps").is_array()) {
            throw ParseError("'amps' must be an array");
        }
        for (const auto &a : doc.at("amps")) {
            if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number()) {
                throw ParseError("each amplitude must be a [real, imaginary] pair");
            }
            amps.emplace_back(a[0].get<double>(), a[1].get<double>());
        }
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("malformed state file: ") + e.what());
    }
    if (!doc.at("dims").is_array() || dims.empty()) {
        throw ParseError("'dims' must be a non-empty array");
    }
    std::size_t expected = checked_entry_count(dims);
    if (amps.size() != expected) {
        throw ShapeError("dims " + doc.at("dims").dump() + " need " + std::to_string(expected) + " amplitudes, file has " +
                         std::to_string(amps.size()));
    }
    PureState raw(dims, DenseTensor(dims, std::move(amps)));
    double n = raw.norm();
    std::vector<std::string> warnings;
    if (std::abs(n - 1) > kNormalizedTolerance) {
        if (policy == NormPolicy::Strict && std::abs(n - 1) > kStrictNormTolerance) {
            throw NormalizationError("state norm " + format_real(n) + " deviates from 1 by more than " +
                                     format_real(kStrictNormTolerance));
        }
        warnings.push_back("input norm " + format_real(n) + " rescaled to 1");
        return {raw.normalized_copy(), std::move(warnings)};
    }
    return {std::move(raw), std::move(warnings)};
}

LoadedState load_state(const std::filesystem::path &path, NormPolicy policy) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read state file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_state(buf.str(), policy);
}

std::string format_state(const PureState &s) {
    std::ostringstream out;
    out << "{\n  \"dims\": [";
    for (std::size_t k = 0; k < s.dims().size(); k++) {
        out << (k ? ", " : "") << s.dims()[k];
    }
    out << "],\n  \"amps\": [\n";
    auto amps = s.amps().data();
    for (std::size_t k = 0; k < amps.size(); k++) {
        out << "    [" << format_real(amps[k].real()) << ", " << format_real(amps[k].imag()) << "]"
            << (k + 1 < amps.size() ? ",\n" : "\n");
    }
    out << "  ]\n}\n";
    return out.str();
}

void save_state(const PureState &s, const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot write state file " + path.string());
    }
    out << format_state(s);
}

}  // namespace entmon
