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

#include "entmon/measures.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "entmon/errors.hpp"

namespace entmon {

namespace {

// Einstein sum of per-party factor tensors against q copies of one state.
// The axis for copy k of party j carries label k*m + j.
class CopyContraction {
   public:
    explicit CopyContraction(const PureState &s) : m_(s.parties()) { tensors_.push_back(s.amps()); }

    CopyContraction &copy(std::size_t k) {
        std::vector<Label> labels;
        for (std::size_t j = 0; j < m_; j++) {
            labels.push_back(label(k, j));
        }
        plan_.inputs.push_back({0, std::move(labels)});
        return *this;
    }

    CopyContraction &factor(const DenseTensor &t, std::size_t party, std::initializer_list<std::size_t> copy_ids) {
        std::vector<Label> labels;
        for (auto k : copy_ids) {
            labels.push_back(label(k, party));
        }
        tensors_.push_back(t);
        plan_.inputs.push_back({tensors_.size() - 1, std::move(labels)});
        return *this;
    }

    complex evaluate() const { return contract(plan_, tensors_)[0]; }

   private:
    Label label(std::size_t k, std::size_t j) const { return static_cast<Label>(k * m_ + j); }

    std::size_t m_;
    std::vector<DenseTensor> tensors_;
    ContractionPlan plan_;
};

void require_qubits(const PureState &s, const char *measure, std::size_t min_parties) {
    if (!s.all_qubits() || s.parties() < min_parties) {
        throw InapplicableError(std::string(measure) + " needs at least " + std::to_string(min_parties) +
                                " qubit parties");
    }
}

MeasureReport singlet_report(std::string name, std::size_t q, complex raw) {
    MeasureReport r;
    r.name = std::move(name);
    r.q = q;
    r.raw = raw;
    r.magnitude = std::abs(raw);
    r.monotone = std::pow(r.magnitude, 1.0 / static_cast<double>(q));
    return r;
}

double factorial(std::size_t n) {
    double f = 1;
    for (std::size_t k = 2; k <= n; k++) {
        f *= static_cast<double>(k);
    }
    return f;
}

}  // namespace

std::optional<double> MeasureReport::detail(std::string_view key) const {
    for (const auto &[k, v] : details) {
        if (k == key) {
            return v;
        }
    }
    return std::nullopt;
}

MeasureReport concurrence_2qubit(const PureState &s) {
    if (s.dims() != Shape{2, 2}) {
        throw InapplicableError("concurrence2 needs a 2-qubit state");
    }
    DenseTensor eps = levi_civita(2);
    complex sum = CopyContraction(s).copy(0).factor(eps, 0, {0, 1}).factor(eps, 1, {0, 1}).copy(1).evaluate();
    auto r = singlet_report("concurrence2", 2, 0.5 * sum);
    r.details.emplace_back("standard_concurrence", 2 * r.magnitude);
    r.details.emplace_back("standard_concurrence_factor", 2);
    return r;
}

MeasureReport gen_concurrence_order2(const PureState &s) {
    require_qubits(s, "genconc2", 2);
    std::size_t m = s.parties();
    DenseTensor eps = levi_civita(2);
    CopyContraction c(s);
    c.copy(0);
    for (std::size_t j = 0; j < m; j++) {
        c.factor(eps, j, {0, 1});
    }
    c.copy(1);
    complex sum = c.evaluate() * std::pow(2.0, -static_cast<double>(m) / 2);
    auto r = singlet_report("genconc2", 2, sum);
    if (m % 2 == 1) {
        r.flags.push_back("odd party count: copy-antisymmetric singlet, vanishes identically");
    }
    return r;
}

MeasureReport three_tangle(const PureState &s) {
    if (s.dims() != Shape{2, 2, 2}) {
        throw InapplicableError("tangle3 needs a 3-qubit state");
    }
    DenseTensor eps = levi_civita(2);
    DenseTensor d = s4a().data;
    const double root3 = std::sqrt(3.0);

    // (1/8) eps eps | eps eps | eps_(0,2) eps_(1,3)
    CopyContraction bbc(s);
    bbc.copy(0)
        .factor(eps, 0, {0, 1})
        .factor(eps, 0, {2, 3})
        .factor(eps, 1, {0, 1})
        .factor(eps, 1, {2, 3})
        .factor(eps, 2, {0, 2})
        .factor(eps, 2, {1, 3})
        .copy(1)
        .copy(2)
        .copy(3);
    complex overlap_bbc = bbc.evaluate() / 8.0;

    CopyContraction aaa(s);
    aaa.copy(0).factor(d, 0, {0, 1, 2, 3}).factor(d, 1, {0, 1, 2, 3}).factor(d, 2, {0, 1, 2, 3}).copy(1).copy(2).copy(3);
    complex overlap_aaa = aaa.evaluate();

    CopyContraction bba(s);
    bba.copy(0)
        .factor(eps, 0, {0, 1})
        .factor(eps, 0, {2, 3})
        .factor(eps, 1, {0, 1})
        .factor(eps, 1, {2, 3})
        .factor(d, 2, {0, 1, 2, 3})
        .copy(1)
        .copy(2)
        .copy(3);
    complex overlap_bba = bba.evaluate() / 4.0;

    double tau = 16 * std::abs(overlap_bbc);
    double tau_aaa = 8 * root3 * std::abs(overlap_aaa);
    double tau_bba = 8 * root3 * std::abs(overlap_bba);
    double discrepancy =
        std::max({std::abs(tau - tau_aaa), std::abs(tau - tau_bba), std::abs(tau_aaa - tau_bba)});

    MeasureReport r;
    r.name = "tangle3";
    r.q = 4;
    r.raw = overlap_bbc;
    r.magnitude = tau;
    r.monotone = std::pow(tau, 0.25);
    r.details.emplace_back("overlap_s4b_s4b_s4c", std::abs(overlap_bbc));
    r.details.emplace_back("tau_from_s4a_s4a_s4a", tau_aaa);
    r.details.emplace_back("tau_from_s4b_s4b_s4a", tau_bba);
    r.details.emplace_back("max_discrepancy", discrepancy);
    r.flags.push_back("magnitude is the 3-tangle, 16 x |raw|");
    return r;
}

MeasureReport gen_tangle_order4(const PureState &s) {
    require_qubits(s, "gentangle4", 3);
    std::size_t m = s.parties();
    DenseTensor d = s4a().data;
    CopyContraction c(s);
    c.copy(0);
    for (std::size_t j = 0; j < m; j++) {
        c.factor(d, j, {0, 1, 2, 3});
    }
    c.copy(1).copy(2).copy(3);
    return singlet_report("gentangle4", 4, c.evaluate());
}

MeasureReport qudit_det_measure(const PureState &s) {
    if (s.parties() != 2 || s.dims()[0] != s.dims()[1]) {
        throw InapplicableError("detmeasure needs an N x N bipartite state");
    }
    std::size_t n = s.dims()[0];
    DenseTensor eps = levi_civita(n);
    std::vector<Label> first, second;
    ContractionPlan plan;
    for (std::size_t k = 0; k < n; k++) {
        first.push_back(static_cast<Label>(2 * k));
        second.push_back(static_cast<Label>(2 * k + 1));
    }
    // eps_a, then one copy at a time, then eps_b keeps intermediates at n^n
    plan.inputs.push_back({1, first});
    for (std::size_t k = 0; k < n; k++) {
        plan.inputs.push_back({0, {first[k], second[k]}});
    }
    plan.inputs.push_back({1, second});
    std::vector<DenseTensor> tensors{s.amps(), eps};
    complex sum = contract(plan, tensors)[0] / factorial(n);
    auto r = singlet_report("detmeasure", n, sum);

    Eigen::MatrixXcd c(n, n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s.amps()[i * n + j];
        }
    }
    r.details.emplace_back("abs_det_lu", std::abs(c.partialPivLu().determinant()));
    return r;
}

MeasureReport monotone(const InvariantSpec &spec, const PureState &s) {
    auto result = overlap(spec, s);
    auto r = singlet_report("singlet-overlap", spec.order(), result.value);
    if (!result.admissible) {
        r.flags.push_back("inadmissible: copy-antisymmetric singlet product, overlap vanishes identically");
    }
    r.flags.push_back("spec " + spec.describe());
    return r;
}

MeasureReport husimi(const PureState &s, std::size_t q) {
    MeasureReport r;
    r.name = "husimi";
    r.q = q;
    double moment = husimi_moment(s, q);
    r.magnitude = std::sqrt(moment);
    r.details.emplace_back("moment", moment);
    return r;
}

MeasureReport component(const PureState &s, const ProjectorSpec &spec) {
    MeasureReport r;
    r.name = "component-norms";
    r.q = spec.q;
    r.magnitude = component_norm(s, spec);
    r.details.emplace_back("squared_norm", r.magnitude * r.magnitude);
    r.flags.push_back("projector " + spec.describe());
    return r;
}

WitnessResult slocc_witness(const PureState &a, const PureState &b, const WitnessProbe &probe) {
    if (a.dims() != b.dims()) {
        throw ShapeError("slocc_witness needs states of equal dimensions");
    }
    PureState na = a.normalized_copy();
    PureState nb = b.normalized_copy();
    auto value = [&](const PureState &s) {
        if (const auto *spec = std::get_if<InvariantSpec>(&probe)) {
            return std::abs(overlap(*spec, s).value);
        }
        return component_norm(s, std::get<ProjectorSpec>(probe));
    };
    WitnessResult out;
    out.value_a = value(na);
    out.value_b = value(nb);
    double lo = std::min(out.value_a, out.value_b);
    double hi = std::max(out.value_a, out.value_b);
    if (lo <= kWitnessZero && hi > kWitnessZero && hi - lo > kWitnessGap) {
        out.verdict = Verdict::Separated;
    }
    return out;
}

MeasureReport measure_by_name(std::string_view name, const PureState &s) {
    if (name == "concurrence2") return concurrence_2qubit(s);
    if (name == "genconc2") return gen_concurrence_order2(s);
    if (name == "tangle3") return three_tangle(s);
    if (name == "gentangle4") return gen_tangle_order4(s);
    if (name == "detmeasure") return qudit_det_measure(s);
    throw ParseError("unknown measure '" + std::string(name) + "'");
}

}  // namespace entmon
