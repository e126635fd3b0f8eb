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

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "entmon/projectors.hpp"
#include "entmon/singlets.hpp"
#include "entmon/state.hpp"

namespace entmon {

struct MeasureReport {
    std::string name;
    std::size_t q = 0;
    /// Signed overlap before taking the modulus, for singlet-based measures.
    std::optional<complex> raw;
    double magnitude = 0;
    /// magnitude^(1/q); only set for singlet-based measures.
    std::optional<double> monotone;
    /// Cross-checks and derived values, in insertion order.
    std::vector<std::pair<std::string, double>> details;
    std::vector<std::string> flags;

    std::optional<double> detail(std::string_view key) const;
};

/// |c11 c00 - c10 c01| = |<s2 s2|psi psi>|, i.e. half the usual concurrence.
MeasureReport concurrence_2qubit(const PureState &s);

/// 2^(-m/2) |eps...eps c c| on m qubits; zero for odd m.
MeasureReport gen_concurrence_order2(const PureState &s);

/// 3-tangle, 16 |<s4b s4b s4c|psi^4>|, with the s4a^3 and s4b s4b s4a forms
/// (each 8 sqrt(3) times the overlap) as cross-checks.
MeasureReport three_tangle(const PureState &s);

/// |<s4a^(x)m|psi^4>| on m >= 3 qubits.
MeasureReport gen_tangle_order4(const PureState &s);

/// (1/N!) |eps eps c...c| on an N x N state; equals |det C|.
MeasureReport qudit_det_measure(const PureState &s);

/// |<spec|psi^q>| and its q-th root.
MeasureReport monotone(const InvariantSpec &spec, const PureState &s);

/// Norm of the maximum-weight component of q copies; the moment is its square.
MeasureReport husimi(const PureState &s, std::size_t q);

/// Norm of one projected component of q copies.
MeasureReport component(const PureState &s, const ProjectorSpec &spec);

/// Absolute zero threshold and minimum gap used by slocc_witness.
inline constexpr double kWitnessZero = 1e-8;
inline constexpr double kWitnessGap = 1e-6;

enum class Verdict { Separated, Inconclusive };

struct WitnessResult {
    Verdict verdict = Verdict::Inconclusive;
    double value_a = 0;
    double value_b = 0;
};

using WitnessProbe = std::variant<InvariantSpec, ProjectorSpec>;

/// Reports Separated when the probe is nonzero on one (normalized) state and
/// zero on the other: the two cannot be related by an invertible local
/// operation. Never asserts that two states share a class.
WitnessResult slocc_witness(const PureState &a, const PureState &b, const WitnessProbe &probe);

/// Names accepted by measure_by_name (CLI measure names that need no extra
/// parameters).
MeasureReport measure_by_name(std::string_view name, const PureState &s);

}  // namespace entmon
