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

#include "entmon/audit.hpp"

#include <cmath>
#include <stdexcept>

#include "entmon/errors.hpp"
#include "entmon/measures.hpp"
#include "entmon/projectors.hpp"
#include "entmon/singlets.hpp"

namespace entmon {

namespace {

Matrix ginibre(std::size_t n, Rng &rng) {
    auto dim = static_cast<Eigen::Index>(n);
    Matrix g(dim, dim);
    for (Eigen::Index i = 0; i < dim; i++) {
        for (Eigen::Index j = 0; j < dim; j++) {
            g(i, j) = rng.complex_normal();
        }
    }
    return g;
}

Matrix unit_determinant(const Matrix &m) {
    complex det = m.determinant();
    return m / std::pow(det, 1.0 / static_cast<double>(m.rows()));
}

bool dims_are(const Shape &dims, std::size_t n, std::size_t parties) {
    return dims == Shape(parties, n);
}

AuditedQuantity measure_quantity(std::string name, std::function<bool(const Shape &)> applies) {
    return {name, std::move(applies), [name](const PureState &s) { return measure_by_name(name, s).magnitude; }};
}

AuditedQuantity overlap_quantity(const std::string &spec_text, std::size_t parties, std::size_t local_dim) {
    InvariantSpec spec = InvariantSpec::parse(spec_text);
    return {"overlap[" + spec_text + "]", [=](const Shape &d) { return dims_are(d, local_dim, parties); },
            [spec](const PureState &s) { return std::abs(overlap_unchecked(spec, s)); }};
}

bool all_qubits(const Shape &d, std::size_t min_parties) {
    return d.size() >= min_parties && d == Shape(d.size(), 2);
}

// Magnitudes of the singlet-based named measures.
std::vector<AuditedQuantity> named_measure_quantities() {
    return {
        measure_quantity("concurrence2", [](const Shape &d) { return dims_are(d, 2, 2); }),
        measure_quantity("genconc2", [](const Shape &d) { return all_qubits(d, 2); }),
        measure_quantity("tangle3", [](const Shape &d) { return dims_are(d, 2, 3); }),
        measure_quantity("gentangle4", [](const Shape &d) { return all_qubits(d, 3); }),
        measure_quantity("detmeasure", [](const Shape &d) { return d.size() == 2 && d[0] == d[1]; }),
    };
}

}  // namespace

double condition_number(const Matrix &m) {
    Eigen::JacobiSVD<Matrix> svd(m);
    const auto &sv = svd.singularValues();
    return sv(0) / sv(sv.size() - 1);
}

std::vector<Matrix> random_local_unitary(const Shape &dims, Rng &rng) {
    std::vector<Matrix> out;
    for (auto n : dims) {
        Matrix g = ginibre(n, rng);
        Eigen::HouseholderQR<Matrix> qr(g);
        Matrix q = qr.householderQ();
        Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
        for (Eigen::Index k = 0; k < q.cols(); k++) {
            complex d = r(k, k);
            q.col(k) *= d / std::abs(d);
        }
        out.push_back(unit_determinant(q));
    }
    return out;
}

std::vector<Matrix> random_slocc_det1(const Shape &dims, Rng &rng, double condition_cap) {
    if (!(condition_cap > 1)) {
        throw std::invalid_argument("condition cap must exceed 1");
    }
    std::vector<Matrix> out;
    for (auto n : dims) {
        bool found = false;
        for (int attempt = 0; attempt < kMaxSloccAttempts && !found; attempt++) {
            Matrix g = ginibre(n, rng);
            if (std::abs(g.determinant()) == 0) {
                continue;
            }
            g = unit_determinant(g);
            if (condition_number(g) <= condition_cap) {
                out.push_back(std::move(g));
                found = true;
            }
        }
        if (!found) {
            throw std::runtime_error("no det-1 operator with condition number <= cap after " +
                                     std::to_string(kMaxSloccAttempts) + " draws");
        }
    }
    return out;
}

DenseTensor to_tensor(const Matrix &m) {
    auto n = static_cast<std::size_t>(m.rows());
    DenseTensor t({n, static_cast<std::size_t>(m.cols())});
    for (Eigen::Index i = 0; i < m.rows(); i++) {
        for (Eigen::Index j = 0; j < m.cols(); j++) {
            t[static_cast<std::size_t>(i * m.cols() + j)] = m(i, j);
        }
    }
    return t;
}

PureState apply_local(const PureState &s, std::span<const Matrix> ops, bool renormalize) {
    if (ops.size() != s.parties()) {
        throw ShapeError("apply_local needs one operator per party");
    }
    DenseTensor amps = s.amps();
    for (std::size_t j = 0; j < ops.size(); j++) {
        amps = apply_matrix(amps, j, to_tensor(ops[j]));
    }
    PureState out(s.dims(), std::move(amps));
    return renormalize ? out.normalized_copy() : out;
}

bool AuditReport::all_passed() const {
    for (const auto &e : entries) {
        if (!e.pass) {
            return false;
        }
    }
    return true;
}

void AuditReport::append(const AuditReport &other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

AuditReport invariance_audit(std::span<const AuditedQuantity> quantities, std::span<const NamedState> states,
                             const AuditConfig &config, LocalGroup group) {
    AuditReport report{config, {}};
    const bool unitary = group == LocalGroup::Unitary;
    const std::uint64_t stream_base = unitary ? 0 : 1ULL << 32;
    for (std::size_t i = 0; i < states.size(); i++) {
        const auto &named = states[i];
        std::vector<const AuditedQuantity *> active;
        for (const auto &q : quantities) {
            if (q.applies(named.state.dims())) {
                active.push_back(&q);
            }
        }
        if (active.empty()) {
            continue;
        }
        std::vector<double> reference, worst(active.size(), 0);
        for (const auto *q : active) {
            reference.push_back(q->evaluate(named.state));
        }
        for (std::size_t t = 0; t < config.trials; t++) {
            Rng rng(config.seed, stream_base + i, t);
            auto ops = unitary ? random_local_unitary(named.state.dims(), rng)
                               : random_slocc_det1(named.state.dims(), rng, config.condition_cap);
            PureState moved = apply_local(named.state, ops);
            for (std::size_t k = 0; k < active.size(); k++) {
                double dev = std::abs(active[k]->evaluate(moved) - reference[k]);
                worst[k] = std::max(worst[k], std::isnan(dev) ? INFINITY : dev);
            }
        }
        double tol = unitary ? config.lu_tolerance : config.slocc_tolerance;
        for (std::size_t k = 0; k < active.size(); k++) {
            report.entries.push_back({unitary ? "lu-invariance" : "slocc-invariance", active[k]->name, named.name,
                                      config.trials, reference[k], worst[k], tol, worst[k] <= tol});
        }
    }
    return report;
}

AuditReport completeness_audit(std::span<const NamedState> states, const AuditConfig &config) {
    AuditReport report{config, {}};
    for (const auto &named : states) {
        Decomposition dec = decompose(named.state, 2);
        double odd_worst = 0;
        for (const auto &row : dec.rows) {
            std::size_t antisym = 0;
            for (const auto &sel : row.spec.parties) {
                antisym += sel.kind == Selector::Kind::Antisym ? 1 : 0;
            }
            if (antisym % 2 == 1) {
                odd_worst = std::max(odd_worst, std::sqrt(row.squared_norm));
            }
        }
        double dev = std::abs(dec.total - 1);
        report.entries.push_back(
            {"completeness", "sum of q=2 squared norms", named.name, 1, dec.total, dev, kCompletenessTolerance,
             dev <= kCompletenessTolerance});
        report.entries.push_back({"odd-antisym-vanishing", "max odd-pattern norm", named.name, 1, 0, odd_worst,
                                  kVanishingTolerance, odd_worst <= kVanishingTolerance});
    }
    (void)config;
    return report;
}

std::vector<NamedState> canonical_states(std::uint64_t seed) {
    Rng rng(seed, 1ULL << 40, 0);
    std::vector<NamedState> out{
        {"bell", bell()},
        {"ghz3", ghz(3)},
        {"w3", w_state(3)},
        {"ghz4", ghz(4)},
        {"w4", w_state(4)},
        {"maxent3", max_entangled_qudit(3)},
    };
    out.push_back({"random[2,2]", random_state({2, 2}, rng)});
    out.push_back({"random[2,2,2]", random_state({2, 2, 2}, rng)});
    out.push_back({"random[2,2,2,2]", random_state({2, 2, 2, 2}, rng)});
    out.push_back({"random[3,3]", random_state({3, 3}, rng)});
    out.push_back({"random[4,4]", random_state({4, 4}, rng)});
    out.push_back({"random[2,3]", random_state({2, 3}, rng)});
    return out;
}

std::vector<AuditedQuantity> lu_quantities() {
    std::vector<AuditedQuantity> out = named_measure_quantities();
    out.push_back(
        {"husimi[q=2]", [](const Shape &) { return true; }, [](const PureState &s) { return husimi_moment(s, 2); }});
    for (std::size_t m = 2; m <= 4; m++) {
        for (std::size_t pattern = 0; pattern < (std::size_t{1} << m); pattern++) {
            ProjectorSpec spec{2, {}};
            for (std::size_t j = 0; j < m; j++) {
                bool minus = (pattern >> (m - 1 - j)) & 1;
                spec.parties.push_back(minus ? Selector::antisym() : Selector::sym());
            }
            out.push_back({"component[" + spec.describe() + "]", [m](const Shape &d) { return d.size() == m; },
                           [spec](const PureState &s) { return component_norm(s, spec); }});
        }
    }
    return out;
}

std::vector<AuditedQuantity> slocc_quantities() {
    std::vector<AuditedQuantity> out{
        overlap_quantity("s2,s2", 2, 2),
        overlap_quantity("s4a,s4a", 2, 2),
        overlap_quantity("s4a,s4a,s4a", 3, 2),
        overlap_quantity("s4b,s4b,s4a", 3, 2),
        overlap_quantity("s4b,s4b,s4c", 3, 2),
        overlap_quantity("s2,s2,s2,s2", 4, 2),
        overlap_quantity("s4a,s4a,s4a,s4a", 4, 2),
        overlap_quantity("s4b,s4b,s4a,s4a", 4, 2),
        overlap_quantity("s3,s3", 2, 3),
        overlap_quantity("sN(4),sN(4)", 2, 4),
    };
    auto named = named_measure_quantities();
    out.insert(out.end(), named.begin(), named.end());
    return out;
}

AuditReport run_canonical_suite(const AuditConfig &config) {
    auto states = canonical_states(config.seed);
    auto lu = lu_quantities();
    auto slocc = slocc_quantities();
    AuditReport report{config, {}};
    report.append(invariance_audit(lu, states, config, LocalGroup::Unitary));
    report.append(invariance_audit(slocc, states, config, LocalGroup::SloccDet1));

    std::vector<NamedState> random;
    Rng rng(config.seed, 1ULL << 41, 0);
    std::size_t count = std::min<std::size_t>(config.trials, 20);
    for (std::size_t m = 2; m <= 4; m++) {
        for (std::size_t k = 0; k < count; k++) {
            random.push_back({"random" + std::to_string(m) + "q#" + std::to_string(k), random_state(Shape(m, 2), rng)});
        }
    }
    report.append(completeness_audit(states, config));
    report.append(completeness_audit(random, config));
    return report;
}

}  // namespace entmon
