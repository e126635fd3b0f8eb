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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "entmon/state.hpp"
#include "entmon/tensor.hpp"

namespace entmon {

/// Per-party irrep selector acting on the q copies of one party.
struct Selector {
    enum class Kind { Sym, Antisym, Spin };

    Kind kind = Kind::Sym;
    /// 2j for Kind::Spin; unused otherwise.
    int twice_j = 0;

    static Selector sym() { return {Kind::Sym, 0}; }
    static Selector antisym() { return {Kind::Antisym, 0}; }
    static Selector spin(int twice_j) { return {Kind::Spin, twice_j}; }

    /// "sym" / "+", "antisym" / "-", "spin:<j>" with j as "1", "3/2" or "1.5".
    static Selector parse(std::string_view text);
    std::string describe() const;

    bool operator==(const Selector &) const = default;
};

struct ProjectorSpec {
    std::size_t q = 2;
    std::vector<Selector> parties;

    /// Throws InapplicableError unless the spec fits the party dimensions:
    /// spin(j) only on qubits with 2j = q mod 2 and 0 <= j <= q/2, antisym
    /// only when q <= the party dimension.
    void check(const Shape &dims) const;
    std::string describe() const;

    /// Comma-separated selectors, one per party.
    static ProjectorSpec parse(std::size_t q, std::string_view list);
};

/// Average of t over all permutations of `axes` (which must share one extent).
DenseTensor symmetrizer_apply(const DenseTensor &t, std::span<const std::size_t> axes);
/// Signed average over all permutations of `axes`.
DenseTensor antisymmetrizer_apply(const DenseTensor &t, std::span<const std::size_t> axes);

/// Total-spin Casimir J^2 on a set of qubit axes.
///
/// With S_r the spin-1/2 operators and SWAP_rs the exchange of axes r and s,
/// S_r . S_s = SWAP_rs / 2 - 1/4, hence for q axes
///     J^2 = q (4 - q) / 4 + sum_{r<s} SWAP_rs.
DenseTensor casimir_apply(const DenseTensor &t, std::span<const std::size_t> axes);

/// Allowed values of 2j for q spin-1/2 constituents: q, q-2, ..., down to 0 or 1.
std::vector<int> admissible_twice_spins(std::size_t q);

/// Projector onto total spin j of the listed qubit axes, evaluated as the
/// Casimir polynomial prod_{j' != j} (J^2 - j'(j'+1)) / (j(j+1) - j'(j'+1)).
DenseTensor spin_projector_apply(const DenseTensor &t, std::span<const std::size_t> axes, int twice_j);

/// Applies the selectors to copies(s, q); party j acts on axes {k*m + j}.
DenseTensor project_copies(const PureState &s, const ProjectorSpec &spec);

/// |P psi^(x)q|.
double component_norm(const PureState &s, const ProjectorSpec &spec);

/// Squared norm of the fully symmetric (maximum-weight) component of q copies.
/// Equals 1 exactly for product states.
double husimi_moment(const PureState &s, std::size_t q);

struct ComponentRow {
    ProjectorSpec spec;
    double squared_norm = 0;
};

struct Decomposition {
    std::size_t q = 2;
    std::vector<ComponentRow> rows;
    double total = 0;
};

/// All per-party irrep combinations and their squared norms.
///
/// q = 2 enumerates sym/antisym on every party (any dimensions). For q > 2
/// every party must be a qubit and the rows enumerate total spin per party.
/// Irrep multiplicities are not resolved.
Decomposition decompose(const PureState &s, std::size_t q);

}  // namespace entmon
