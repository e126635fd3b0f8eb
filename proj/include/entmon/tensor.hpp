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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace entmon {

using complex = std::complex<double>;
using Shape = std::vector<std::size_t>;

/// Largest number of entries any dense tensor (including contraction
/// intermediates) may hold.
inline constexpr std::size_t kMaxTensorEntries = std::size_t{1} << 22;

/// Product of extents. Throws CapacityError above kMaxTensorEntries and
/// ShapeError on a zero extent.
std::size_t checked_entry_count(std::span<const std::size_t> shape);

/// Dense complex tensor, row-major (last index varies fastest).
///
/// Rank 0 is a scalar holding one entry. Every extent is at least 1.
class DenseTensor {
   public:
    DenseTensor();
    explicit DenseTensor(Shape shape);
    DenseTensor(Shape shape, std::vector<complex> data);

    static DenseTensor scalar(complex value);
    static DenseTensor vector(std::vector<complex> values);
    /// Square matrix from row-major entries.
    static DenseTensor matrix(std::size_t n, std::vector<complex> row_major);
    static DenseTensor identity(std::size_t n);

    const Shape &shape() const { return shape_; }
    std::size_t rank() const { return shape_.size(); }
    std::size_t size() const { return data_.size(); }
    std::size_t extent(std::size_t axis) const { return shape_.at(axis); }

    std::span<const complex> data() const { return data_; }
    std::span<complex> data() { return data_; }

    complex &operator[](std::size_t flat) { return data_[flat]; }
    const complex &operator[](std::size_t flat) const { return data_[flat]; }

    complex &at(std::span<const std::size_t> index);
    const complex &at(std::span<const std::size_t> index) const;
    complex &at(std::initializer_list<std::size_t> index) {
        return at(std::span<const std::size_t>(index.begin(), index.size()));
    }
    const complex &at(std::initializer_list<std::size_t> index) const {
        return at(std::span<const std::size_t>(index.begin(), index.size()));
    }

    std::size_t flat_index(std::span<const std::size_t> index) const;
    std::vector<std::size_t> multi_index(std::size_t flat) const;
    std::vector<std::size_t> strides() const;

    DenseTensor &operator+=(const DenseTensor &other);
    DenseTensor &operator-=(const DenseTensor &other);
    DenseTensor &operator*=(complex factor);

    bool operator==(const DenseTensor &other) const = default;

   private:
    Shape shape_;
    std::vector<complex> data_;
};

DenseTensor operator+(DenseTensor a, const DenseTensor &b);
DenseTensor operator-(DenseTensor a, const DenseTensor &b);
DenseTensor operator*(complex factor, DenseTensor t);

/// Tensor product; shape is a.shape followed by b.shape.
DenseTensor outer(const DenseTensor &a, const DenseTensor &b);

/// Sum of conj(a_i) * b_i. Shapes must match.
complex inner(const DenseTensor &a, const DenseTensor &b);

double norm(const DenseTensor &t);

/// Largest entrywise |a - b|. Shapes must match.
double max_abs_diff(const DenseTensor &a, const DenseTensor &b);

/// Axis k of the result is axis perm[k] of t.
DenseTensor permute_axes(const DenseTensor &t, std::span<const std::size_t> perm);
DenseTensor permute_axes(const DenseTensor &t, std::initializer_list<std::size_t> perm);

/// Contracts `matrix` (n x n) into one axis: out[.., i, ..] = sum_j M[i][j] t[.., j, ..].
DenseTensor apply_matrix(const DenseTensor &t, std::size_t axis, const DenseTensor &matrix);

/// Unnormalized rank-n antisymmetric symbol with extent n per axis.
DenseTensor levi_civita(std::size_t n);

/// Sign (+1 or -1) of a permutation of 0..n-1.
int permutation_sign(std::span<const std::size_t> perm);

using Label = int;

struct ContractionTerm {
    std::size_t tensor;  // index into the tensor list passed to contract()
    std::vector<Label> labels;
};

/// Einstein-summation plan. A label that occurs once across all terms is
/// free and must be listed in `output`; a label that occurs twice is summed
/// and must not be. A term may reuse a tensor id (e.g. several copies of a
/// state) and may repeat a label within itself (a trace).
struct ContractionPlan {
    std::vector<ContractionTerm> inputs;
    std::vector<Label> output;

    /// Builds a plan from einsum notation such as "ij,jk->ik".
    /// Term k refers to tensor k; labels are single ASCII letters.
    static ContractionPlan parse(std::string_view einsum);
};

/// Throws ShapeError describing the first problem, before any arithmetic.
void validate(const ContractionPlan &plan, std::span<const DenseTensor> tensors);

/// Evaluates the plan by pairwise contraction in input order.
/// Intermediates are subject to kMaxTensorEntries.
DenseTensor contract(const ContractionPlan &plan, std::span<const DenseTensor> tensors);
DenseTensor contract(const ContractionPlan &plan, std::initializer_list<DenseTensor> tensors);

}  // namespace entmon
