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

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "entmon/rng.hpp"
#include "entmon/tensor.hpp"

namespace entmon {

/// Tolerance on |norm - 1| below which a state counts as normalized.
inline constexpr double kNormalizedTolerance = 1e-9;

/// Multipartite pure state: party dimensions and the amplitude tensor
/// c[i1, ..., im] of shape `dims`.
///
/// The amplitudes are taken as given. Unnormalized states are legal (the
/// invariance audits rely on them); normalized() reports the flag.
class PureState {
   public:
    PureState(Shape dims, DenseTensor amps);

    const Shape &dims() const { return dims_; }
    const DenseTensor &amps() const { return amps_; }
    std::size_t parties() const { return dims_.size(); }
    bool normalized() const { return normalized_; }
    double norm() const { return entmon::norm(amps_); }

    /// Rescaled to unit norm. Throws NormalizationError for the zero vector.
    PureState normalized_copy() const;

    bool all_qubits() const;

   private:
    Shape dims_;
    DenseTensor amps_;
    bool normalized_;
};

/// Product of the normalized local vectors.
PureState product_state(std::span<const std::vector<complex>> locals);
PureState product_state(std::initializer_list<std::vector<complex>> locals);
/// (|0...0> + |1...1>) / sqrt(2) on m qubits.
PureState ghz(std::size_t m);
/// Equal superposition of the m weight-one basis states.
PureState w_state(std::size_t m);
PureState bell();
/// sum_i |ii> / sqrt(n).
PureState max_entangled_qudit(std::size_t n);
/// Normalized state with i.i.d. complex Gaussian amplitudes.
PureState random_state(const Shape &dims, Rng &rng);
/// Product of random local vectors.
PureState random_product_state(const Shape &dims, Rng &rng);

/// The q-fold tensor power of the amplitude tensor, axes copy-major:
/// (copy 0: party 0..m-1), (copy 1: party 0..m-1), ...
/// Axis k*m + j is party j of copy k.
DenseTensor copies(const PureState &s, std::size_t q);

enum class NormPolicy {
    Auto,    // rescale and record a warning
    Strict,  // reject |norm - 1| > kStrictNormTolerance
};

inline constexpr double kStrictNormTolerance = 1e-6;

struct LoadedState {
    PureState state;
    std::vector<std::string> warnings;
};

/// State file: JSON object {"dims": [..], "amps": [[re, im], ...]} with
/// amplitudes row-major (last party index fastest).
LoadedState parse_state(std::string_view text, NormPolicy policy = NormPolicy::Auto);
LoadedState load_state(const std::filesystem::path &path, NormPolicy policy = NormPolicy::Auto);

/// Writes every amplitude component with 17 significant digits, which
/// round-trips doubles exactly.
std::string format_state(const PureState &s);
void save_state(const PureState &s, const std::filesystem::path &path);

}  // namespace entmon
