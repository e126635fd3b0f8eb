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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "entmon/audit.hpp"
#include "entmon/cli.hpp"
#include "entmon/measures.hpp"
#include "entmon/projectors.hpp"
#include "entmon/singlets.hpp"
#include "oracles.hpp"

using namespace entmon;
namespace fs = std::filesystem;

namespace {

const double kSqrt3 = std::sqrt(3.0);

struct Outcome {
    bool pass = true;
    std::string detail;

    // Records a bound check; keeps the first failure's description.
    void bound(bool ok, const char *fmt, double value) {
        if (!ok && pass) {
            char buf[256];
            std::snprintf(buf, sizeof(buf), fmt, value);
            detail = buf;
        }
        pass = pass && ok;
    }
};

std::string cli(std::vector<std::string> args, int &code) {
    args.insert(args.begin(), "entmon");
    std::ostringstream out, err;
    code = run_cli(args, out, err);
    return out.str();
}

double cli_magnitude(const std::string &measure, const fs::path &state) {
    int code = 0;
    std::string out = cli({"compute", measure, state.string()}, code);
    if (code != 0) return NAN;
    return nlohmann::json::parse(out)["results"][0]["magnitude"].get<double>();
}

std::string fmt(const char *f, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), f, a, b, c);
    return buf;
}

PureState sample(const Shape &dims, std::uint64_t stream, std::uint64_t k) {
    return oracle::random_state_for_test(dims, 1000 + stream, k);
}

Outcome concurrence(const fs::path &dir) {
    Outcome v;
    fs::path bell_path = dir / "bell.json";
    save_state(bell(), bell_path);
    double b = cli_magnitude("concurrence2", bell_path);
    v.bound(std::abs(b - 0.5) <= 1e-12, "bell gave %.17g", b);
    Rng rng(1, 1, 0);
    double worst = 0;
    for (int k = 0; k < 20; k++) {
        fs::path p = dir / ("product" + std::to_string(k) + ".json");
        save_state(random_product_state({2, 2}, rng), p);
        double c = cli_magnitude("concurrence2", p);
        v.bound(c <= 1e-12, "product state gave %.3g", c);
        worst = std::max(worst, c);
    }
    v.detail = v.pass ? fmt("bell %.17g, max over 20 product states %.2e", b, worst) : v.detail;
    return v;
}

Outcome tangle_agreement() {
    Outcome v;
    InvariantSpec bbc = InvariantSpec::parse("s4b,s4b,s4c");
    InvariantSpec aaa = InvariantSpec::parse("s4a,s4a,s4a");
    InvariantSpec bba = InvariantSpec::parse("s4b,s4b,s4a");
    double worst = 0;
    for (std::uint64_t k = 0; k < 100; k++) {
        PureState s = sample({2, 2, 2}, 2, k);
        double t1 = 16 * std::abs(overlap(bbc, s).value);
        double t2 = 8 * kSqrt3 * std::abs(overlap(aaa, s).value);
        double t3 = 8 * kSqrt3 * std::abs(overlap(bba, s).value);
        double d = std::max({std::abs(t1 - t2), std::abs(t1 - t3), std::abs(t2 - t3)});
        worst = std::max(worst, d);
    }
    v.bound(worst <= 1e-12, "max pairwise difference %.3g", worst);
    if (v.pass) v.detail = fmt("max pairwise difference %.2e over 100 states", worst);
    return v;
}

Outcome tangle_values() {
    Outcome v;
    double g = oracle::tangle_epsilon_loops(ghz(3));
    double w = oracle::tangle_epsilon_loops(w_state(3));
    double gl = three_tangle(ghz(3)).magnitude;
    double wl = three_tangle(w_state(3)).magnitude;
    v.bound(std::abs(g - 1) <= 1e-10, "oracle ghz %.17g", g);
    v.bound(w <= 1e-12, "oracle w %.3g", w);
    v.bound(std::abs(gl - 1) <= 1e-10, "library ghz %.17g", gl);
    v.bound(wl <= 1e-12, "library w %.3g", wl);
    if (v.pass) v.detail = fmt("ghz %.17g (oracle %.17g), w %.2e", gl, g, std::max(w, wl));
    return v;
}

Outcome odd_s4b() {
    Outcome v;
    std::vector<InvariantSpec> specs;
    for (unsigned mask = 0; mask < 8; mask++) {
        if (__builtin_popcount(mask) % 2 == 0) continue;
        InvariantSpec spec;
        for (int j = 0; j < 3; j++) spec.parties.push_back((mask >> j) & 1 ? s4b() : s4a());
        specs.push_back(spec);
    }
    double worst = 0;
    for (std::uint64_t k = 0; k < 50; k++) {
        PureState s = sample({2, 2, 2}, 4, k);
        for (const auto &spec : specs) {
            v.bound(!spec.admissible(), "spec %g not flagged", 0);
            worst = std::max(worst, std::abs(overlap_unchecked(spec, s)));
            worst = std::max(worst, std::abs(overlap(spec, s).value));
        }
    }
    v.bound(worst <= 1e-14, "max overlap %.3g", worst);
    if (v.pass) v.detail = fmt("%g specs x 50 states, max |overlap| %.2e", static_cast<double>(specs.size()), worst);
    return v;
}

Outcome concurrence_identity() {
    Outcome v;
    ProjectorSpec mmp = ProjectorSpec::parse(2, "antisym,antisym,sym");
    double worst = 0;
    for (std::uint64_t k = 0; k < 100; k++) {
        PureState s = sample({2, 2, 2}, 5, k);
        double lhs = std::pow(component_norm(s, mmp), 2);
        double c = oracle::wootters_concurrence_ab(s);
        double rhs = c * c / 4 + three_tangle(s).magnitude / 8;
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    v.bound(worst <= 1e-10, "max difference %.3g", worst);
    if (v.pass) v.detail = fmt("max difference %.2e over 100 states", worst);
    return v;
}

Outcome husimi_criterion() {
    Outcome v;
    Rng rng(1, 6, 0);
    double worst = 0;
    for (std::size_t q = 2; q <= 4; q++) {
        for (int k = 0; k < 10; k++) {
            for (const Shape &dims : {Shape{2, 2}, Shape{2, 2, 2}, Shape{3, 2}}) {
                double h = husimi_moment(random_product_state(dims, rng), q);
                worst = std::max(worst, std::abs(h - 1));
            }
        }
    }
    v.bound(worst <= 1e-12, "product deviation %.3g", worst);
    double b = husimi_moment(bell(), 2);
    double bo = oracle::husimi2_swap_identity(bell());
    v.bound(std::abs(b - 0.75) <= 1e-12, "bell %.17g", b);
    v.bound(std::abs(bo - 0.75) <= 1e-12, "bell oracle %.17g", bo);
    double g = husimi_moment(ghz(3), 2);
    double w = husimi_moment(w_state(3), 2);
    v.bound(g < 1 - 1e-6, "ghz3 %.17g", g);
    v.bound(w < 1 - 1e-6, "w3 %.17g", w);
    if (v.pass) {
        v.detail = fmt("product max deviation %.2e, bell %.17g", worst, b) + fmt(", ghz3 %.6f, w3 %.6f", g, w);
    }
    return v;
}

Outcome order4_values() {
    Outcome v;
    double worst_w = 0;
    for (std::size_t m : {3, 4, 5}) worst_w = std::max(worst_w, gen_tangle_order4(w_state(m)).magnitude);
    v.bound(worst_w <= 1e-12, "w max %.3g", worst_w);
    std::vector<double> ratios;
    for (std::size_t m : {3, 4}) {
        double value = gen_tangle_order4(ghz(m)).magnitude;
        double brute = oracle::gentangle4_loops(ghz(m));
        v.bound(std::abs(value - brute) <= 1e-12, "ghz vs oracle differ by %.3g", std::abs(value - brute));
        double md = static_cast<double>(m);
        double closed = (std::pow(2.0, md + 1) + 4 * (m % 2 ? -1 : 1)) / std::pow(2 * kSqrt3, md);
        ratios.push_back(value / closed);
    }
    double g3 = gen_tangle_order4(ghz(3)).magnitude;
    v.bound(std::abs(g3 - 1 / (8 * kSqrt3)) <= 1e-12, "ghz3 %.17g", g3);
    v.bound(std::abs(ratios[0] - ratios[1]) <= 1e-12, "ratio varies by %.3g", std::abs(ratios[0] - ratios[1]));
    if (v.pass) {
        v.detail = fmt("ghz3 %.17g; ratio to closed form %.15f (m=3), %.15f (m=4)", g3, ratios[0], ratios[1]);
    }
    return v;
}

Outcome det_measure() {
    Outcome v;
    double worst = 0;
    for (std::size_t n : {2, 3, 4}) {
        for (std::uint64_t k = 0; k < 50; k++) {
            PureState s = sample({n, n}, 8, n * 100 + k);
            double expect = std::abs(oracle::cofactor_det(oracle::amplitude_matrix(s)));
            worst = std::max(worst, std::abs(qudit_det_measure(s).magnitude - expect));
        }
    }
    v.bound(worst <= 1e-12, "max difference %.3g", worst);
    double q = qudit_det_measure(max_entangled_qudit(3)).magnitude;
    v.bound(std::abs(q - 1 / (3 * kSqrt3)) <= 1e-12, "maxent qutrit %.17g", q);
    if (v.pass) v.detail = fmt("max difference %.2e over 150 states, maxent qutrit %.17g", worst, q);
    return v;
}

Outcome from_audit(const AuditReport &r, const char *what) {
    Outcome v;
    double worst_ratio = 0;
    const AuditEntry *worst = nullptr;
    for (const auto &e : r.entries) {
        if (!e.pass && v.pass) {
            v.detail = e.quantity + " on " + e.state + fmt(" deviates by %.3g (tolerance %.1e)", e.max_deviation, e.tolerance);
            v.pass = false;
        }
        double ratio = e.max_deviation / e.tolerance;
        if (!worst || ratio > worst_ratio) {
            worst_ratio = ratio;
            worst = &e;
        }
    }
    if (r.entries.empty()) {
        v.pass = false;
        v.detail = "no audit entries";
    }
    if (v.pass) {
        v.detail = fmt("%g ", static_cast<double>(r.entries.size())) + what + ", worst " + worst->quantity + " on " +
                   worst->state + fmt(" at %.2e", worst->max_deviation);
    }
    return v;
}

Outcome lu_invariance(const AuditConfig &config, const std::vector<NamedState> &states) {
    auto quantities = lu_quantities();
    return from_audit(invariance_audit(quantities, states, config, LocalGroup::Unitary), "LU checks");
}

Outcome slocc_invariance(const AuditConfig &config, const std::vector<NamedState> &states) {
    auto quantities = slocc_quantities();
    return from_audit(invariance_audit(quantities, states, config, LocalGroup::SloccDet1), "SLOCC checks");
}

Outcome completeness() {
    std::vector<NamedState> states;
    for (std::size_t m = 2; m <= 4; m++) {
        for (std::uint64_t k = 0; k < 20; k++) {
            states.push_back({"random" + std::to_string(m) + "q#" + std::to_string(k), sample(Shape(m, 2), 11, m * 100 + k)});
        }
    }
    for (std::uint64_t k = 0; k < 5; k++) {
        states.push_back({"random[3,3]#" + std::to_string(k), sample({3, 3}, 11, 900 + k)});
        states.push_back({"random[2,3,2]#" + std::to_string(k), sample({2, 3, 2}, 11, 950 + k)});
    }
    AuditConfig config;
    return from_audit(completeness_audit(states, config), "completeness checks");
}

Outcome singlet_integrity() {
    Outcome v;
    double worst_norm = 0, worst_res = 0;
    std::vector<SingletTensor> all = builtin_singlets();
    all.push_back(sN(5));
    for (const auto &s : all) {
        worst_norm = std::max(worst_norm, std::abs(norm(s.data) - 1));
        worst_res = std::max(worst_res, annihilation_residual(s.data, s.local_dim));
    }
    v.bound(worst_norm <= 1e-12, "norm deviation %.3g", worst_norm);
    v.bound(worst_res <= 1e-10, "annihilation residual %.3g", worst_res);
    DenseTensor a = s4a().data, b = s4b().data, c = s4c().data;
    double rel = 0;
    for (std::size_t f = 0; f < c.size(); f++) {
        rel = std::max(rel, std::abs(kSqrt3 / 2 * a[f] + 0.5 * b[f] - c[f]));
    }
    v.bound(rel <= 1e-15, "s4c relation off by %.3g", rel);
    if (v.pass) {
        v.detail = fmt("%g tensors, norm %.2e, residual %.2e", static_cast<double>(all.size()), worst_norm, worst_res) +
                   fmt(", s4c relation %.2e", rel);
    }
    return v;
}

Outcome determinism() {
    Outcome v;
    int c1 = 0, c2 = 0;
    std::string a = cli({"audit", "--seed", "1", "--trials", "100"}, c1);
    std::string b = cli({"audit", "--seed", "1", "--trials", "100"}, c2);
    v.pass = c1 == 0 && c2 == 0 && !a.empty() && a == b;
    v.detail = v.pass ? fmt("%g identical bytes", static_cast<double>(a.size()))
                      : fmt("exit codes %g/%g, sizes differ or content differs", c1, c2);
    return v;
}

}  // namespace

int main() {
    fs::path dir = fs::temp_directory_path() / ("entmon_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);

    AuditConfig config;
    config.seed = 1;
    config.trials = 100;
    config.lu_tolerance = 1e-9;
    config.slocc_tolerance = 1e-7;
    config.condition_cap = 10;
    std::vector<NamedState> states = canonical_states(config.seed);

    struct Criterion {
        const char *name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria = {
        {"concurrence", [&] { return concurrence(dir); }},
        {"3-tangle forms agree", tangle_agreement},
        {"3-tangle values", tangle_values},
        {"odd s4b vanishing", odd_s4b},
        {"generalized concurrence identity", concurrence_identity},
        {"husimi criterion", husimi_criterion},
        {"order-4 W/GHZ values", order4_values},
        {"determinant measure", det_measure},
        {"LU invariance", [&] { return lu_invariance(config, states); }},
        {"SLOCC invariance", [&] { return slocc_invariance(config, states); }},
        {"completeness", completeness},
        {"singlet integrity", singlet_integrity},
        {"determinism", determinism},
    };

    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); k++) {
        Outcome v;
        try {
            v = criteria[k].run();
        } catch (const std::exception &e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        failed += !v.pass;
        std::printf("%s %2zu %s: %s\n", v.pass ? "PASS" : "FAIL", k + 1, criteria[k].name, v.detail.c_str());
        std::fflush(stdout);
    }
    fs::remove_all(dir);
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
