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

#include <string>
#include <string_view>
#include <vector>

#include "entmon/state.hpp"
#include "entmon/tensor.hpp"

namespace entmon {

/// Behaviour of a tensor under exchanging two of its copy axes.
enum class ExchangeSign { Symmetric, Antisymmetric, Mixed };

std::string_view to_string(ExchangeSign sign);

/// Unit-norm tensor with `order` axes of extent `local_dim` that is
/// annihilated by every su(local_dim) generator acting on all axes at once.
struct SingletTensor {
    std::string name;
    std::size_t order = 0;
    std::size_t local_dim = 0;
    DenseTensor data;
    /// Entry k describes the transposition of copy axes k and k+1.
    std::vector<ExchangeSign> exchange_signs;
    std::string note;
};

/// (|01> - |10>) / sqrt(2).
SingletTensor s2();
/// eps_ijk / sqrt(6) on qutrits.
SingletTensor s3();
/// The order-4 qubit singlet inside the product of two triplets.
SingletTensor s4a();
/// s2 (x) s2: pairs copies (0,1) and (2,3).
SingletTensor s4b();
/// s2 (x) s2 pairing copies (0,2) and (1,3); equals (sqrt(3)/2) s4a + (1/2) s4b.
SingletTensor s4c();
/// Fully antisymmetric singlet of SU(n) built from n copies.
SingletTensor sN(std::size_t n);

/// Accepts "s2", "s3", "s4a", "s4b", "s4c" and "sN(k)". Throws ParseError.
SingletTensor singlet_by_name(std::string_view name);

/// The fixed singlets plus sN(2..4), in listing order.
std::vector<SingletTensor> builtin_singlets();

/// Classifies t under swapping axes k and k+1 (tolerance 1e-12).
ExchangeSign exchange_sign(const DenseTensor &t, std::size_t k);

/// Generalized Gell-Mann matrices: a basis of n^2 - 1 traceless Hermitian
/// n x n matrices. i times these span su(n).
std::vector<DenseTensor> su_generators(std::size_t n);

/// Largest norm of sum_k T_(axis k) t over the su(n) basis, where every axis
/// of t has extent n. Zero (up to rounding) exactly when t is a singlet.
double annihilation_residual(const DenseTensor &t, std::size_t n);

/// One singlet per party, all of the same order q. The overlap of their
/// product with q copies of a state is an LU and det-1 SLOCC invariant.
struct InvariantSpec {
    std::vector<SingletTensor> parties;

    std::size_t order() const;
    /// False when some copy transposition has a definite sign on every party
    /// and the product of those signs is -1; the overlap then vanishes
    /// identically because q copies of a state are copy-symmetric.
    bool admissible() const;
    std::string describe() const;

    /// Comma-separated singlet names, one per party: "s4b,s4b,s4c".
    static InvariantSpec parse(std::string_view list);
    static InvariantSpec uniform(const SingletTensor &s, std::size_t parties);
};

struct OverlapResult {
    complex value;
    bool admissible = true;
};

/// <s_1 (x) ... (x) s_m | psi^(x)q>.
///
/// Singlet axis k of party j pairs with copy k, party j of the state, i.e.
/// axis k*m + j of copies(s, q). Inadmissible specs return exactly 0 with
/// admissible = false.
OverlapResult overlap(const InvariantSpec &spec, const PureState &s);

/// Same contraction without the admissibility shortcut.
complex overlap_unchecked(const InvariantSpec &spec, const PureState &s);

}  // namespace entmon
