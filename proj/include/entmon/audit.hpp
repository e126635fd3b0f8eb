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

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "entmon/rng.hpp"
#include "entmon/state.hpp"

namespace entmon {

using Matrix = Eigen::MatrixXcd;

struct AuditConfig {
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    double lu_tolerance = 1e-9;
    double slocc_tolerance = 1e-7;
    double condition_cap = 10;
};

/// Completeness and vanishing thresholds for the q = 2 decomposition.
inline constexpr double kCompletenessTolerance = 1e-10;
inline constexpr double kVanishingTolerance = 1e-14;

/// Most draws random_slocc_det1 makes for one party before giving up.
inline constexpr int kMaxSloccAttempts = 1000;

/// One Haar-random special unitary per party: QR of a complex Gaussian
/// matrix, R's diagonal phases folded into Q, then det normalized to 1.
std::vector<Matrix> random_local_unitary(const Shape &dims, Rng &rng);

/// One complex matrix per party with det exactly 1 (divided by the principal
/// n-th root of its determinant) and 2-norm condition number <= condition_cap.
/// Throws std::invalid_argument for cap <= 1 and std::runtime_error when
/// kMaxSloccAttempts draws all fail.
std::vector<Matrix> random_slocc_det1(const Shape &dims, Rng &rng, double condition_cap);

double condition_number(const Matrix &m);

DenseTensor to_tensor(const Matrix &m);

/// Applies ops[j] to party j. The result is renormalized only on request.
PureState apply_local(const PureState &s, std::span<const Matrix> ops, bool renormalize = false);

/// A real-valued state function checked by the audits.
struct AuditedQuantity {
    std::string name;
    std::function<bool(const Shape &)> applies;
    std::function<double(const PureState &)> evaluate;
};

struct NamedState {
    std::string name;
    PureState state;
};

struct AuditEntry {
    std::string check;
    std::string quantity;
    std::string state;
    std::size_t trials = 0;
    double reference = 0;
    double max_deviation = 0;
    double tolerance = 0;
    bool pass = false;
};

struct AuditReport {
    AuditConfig config;
    std::vector<AuditEntry> entries;

    bool all_passed() const;
    void append(const AuditReport &other);
};

enum class LocalGroup {
    Unitary,  // random_local_unitary, state stays normalized
    SloccDet1,  // random_slocc_det1, state left unnormalized
};

/// Max |f(g.s) - f(s)| over config.trials group draws for every applicable
/// (quantity, state) pair. Trial t of state i draws from Rng(seed, i, t).
AuditReport invariance_audit(std::span<const AuditedQuantity> quantities, std::span<const NamedState> states,
                             const AuditConfig &config, LocalGroup group);

/// For each state: |sum of the 2^m q = 2 squared component norms - 1| and the
/// largest squared norm among patterns with an odd number of antisym parties.
AuditReport completeness_audit(std::span<const NamedState> states, const AuditConfig &config);

/// bell, ghz3, w3, ghz4, w4, maxent3 and seeded random states of several shapes.
std::vector<NamedState> canonical_states(std::uint64_t seed);

/// Every named measure, the q = 2 Husimi moment and every q = 2 component norm
/// for 2 to 4 parties.
std::vector<AuditedQuantity> lu_quantities();

/// Singlet overlap magnitudes (degree-q homogeneous, unnormalized level).
std::vector<AuditedQuantity> slocc_quantities();

/// LU and SLOCC invariance on canonical_states plus completeness on
/// `min(trials, 20)` random states each for 2, 3 and 4 qubits.
AuditReport run_canonical_suite(const AuditConfig &config);

}  // namespace entmon
