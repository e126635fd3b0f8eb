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

#include "entmon/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "entmon/audit.hpp"
#include "entmon/errors.hpp"
#include "entmon/measures.hpp"
#include "entmon/report.hpp"

namespace entmon {

namespace {

// Thrown for invalid parameter values that CLI11 cannot catch itself.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Shape parse_dims(const std::string &text) {
    Shape dims;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(part, &used);
            if (used != part.size() || v < 2) {
                throw UsageError("");
            }
            dims.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception &) {
            throw UsageError("--dims expects comma-separated integers >= 2, got '" + text + "'");
        }
    }
    if (dims.empty()) {
        throw UsageError("--dims is empty");
    }
    return dims;
}

// "1,0;0.6,0.8i" style: parties separated by ';', entries by ','; an entry
// is "re" or "re:im".
std::vector<std::vector<complex>> parse_locals(const std::string &text) {
    std::vector<std::vector<complex>> out;
    std::stringstream parties(text);
    std::string party;
    while (std::getline(parties, party, ';')) {
        std::vector<complex> v;
        std::stringstream entries(party);
        std::string entry;
        while (std::getline(entries, entry, ',')) {
            try {
                auto colon = entry.find(':');
                double re = std::stod(entry.substr(0, colon));
                double im = colon == std::string::npos ? 0.0 : std::stod(entry.substr(colon + 1));
                v.emplace_back(re, im);
            } catch (const std::exception &) {
                throw UsageError("bad amplitude '" + entry + "' in --locals");
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct InputState {
    LoadedState loaded;
    std::string digest;
};

InputState read_state(const std::string &path, bool strict) {
    std::string text = read_file(path);
    try {
        return {parse_state(text, strict ? NormPolicy::Strict : NormPolicy::Auto), "sha256:" + sha256_hex(text)};
    } catch (const ShapeError &e) {
        // a dimension/amplitude-count mismatch is a malformed file
        throw ParseError(e.what());
    }
}

void emit(const std::string &text, const std::string &out_path, std::ostream &out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        throw ParseError("cannot write " + out_path);
    }
    file << text;
}

struct GenOptions {
    std::string kind;
    std::optional<std::size_t> m;
    std::optional<std::size_t> n;
    std::string dims;
    std::string locals;
    std::optional<std::uint64_t> seed;
    std::string out;
};

PureState generate(const GenOptions &o) {
    auto need_m = [&]() {
        if (!o.m) {
            throw UsageError(o.kind + " needs --m");
        }
        if (*o.m < 2) {
            throw UsageError("--m must be >= 2");
        }
        return *o.m;
    };
    if (o.kind == "ghz") return ghz(need_m());
    if (o.kind == "w") return w_state(need_m());
    if (o.kind == "bell") return bell();
    if (o.kind == "maxent") {
        if (!o.n || *o.n < 2) {
            throw UsageError("maxent needs --n >= 2");
        }
        return max_entangled_qudit(*o.n);
    }
    if (o.kind == "random") {
        if (!o.seed) {
            throw UsageError("random states need an explicit --seed");
        }
        if (o.dims.empty()) {
            throw UsageError("random needs --dims");
        }
        Rng rng(*o.seed);
        return random_state(parse_dims(o.dims), rng);
    }
    if (o.kind == "product") {
        if (!o.locals.empty()) {
            return product_state(parse_locals(o.locals));
        }
        if (o.dims.empty()) {
            throw UsageError("product needs --locals or --dims");
        }
        Shape dims = parse_dims(o.dims);
        if (o.seed) {
            Rng rng(*o.seed);
            return random_product_state(dims, rng);
        }
        std::vector<std::vector<complex>> locals;
        for (auto d : dims) {
            std::vector<complex> v(d);
            v[0] = 1.0;
            locals.push_back(v);
        }
        return product_state(locals);
    }
    throw UsageError("unknown state kind '" + o.kind + "' (ghz, w, bell, product, maxent, random)");
}

struct ComputeOptions {
    std::string measure;
    std::string state_path;
    std::string spec;
    std::string proj;
    std::size_t q = 2;
    bool strict = false;
    std::string out;
};

MeasureReport compute_measure(const ComputeOptions &o, const PureState &s) {
    if (o.measure == "singlet-overlap") {
        if (o.spec.empty()) {
            throw UsageError("singlet-overlap needs --spec, e.g. --spec s4a,s4a,s4a");
        }
        InvariantSpec spec = InvariantSpec::parse(o.spec);
        if (spec.parties.size() != s.parties()) {
            throw InapplicableError("--spec lists " + std::to_string(spec.parties.size()) + " singlets for a " +
                                    std::to_string(s.parties()) + "-party state");
        }
        try {
            return monotone(spec, s);
        } catch (const ShapeError &e) {
            throw InapplicableError(e.what());
        }
    }
    if (o.measure == "husimi") {
        return husimi(s, o.q);
    }
    if (o.measure == "component-norms") {
        if (o.proj.empty()) {
            throw UsageError("component-norms needs --proj, e.g. --proj antisym,antisym,sym");
        }
        return component(s, ProjectorSpec::parse(o.q, o.proj));
    }
    return measure_by_name(o.measure, s);
}

std::vector<std::string> inputs_for_digest(const AuditConfig &c) {
    return {std::to_string(c.seed), std::to_string(c.trials), fixed17(c.lu_tolerance), fixed17(c.slocc_tolerance),
            fixed17(c.condition_cap)};
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Entanglement measures from irreducible components of copies of a pure state", "entmon"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    GenOptions gen;
    auto *gen_cmd = app.add_subcommand("gen", "Write a state file");
    gen_cmd->add_option("kind", gen.kind, "ghz | w | bell | product | maxent | random")->required();
    gen_cmd->add_option("--m", gen.m, "Number of qubits (ghz, w)");
    gen_cmd->add_option("--n", gen.n, "Local dimension (maxent)");
    gen_cmd->add_option("--dims", gen.dims, "Party dimensions, e.g. 2,2,2 (random, product)");
    gen_cmd->add_option("--locals", gen.locals, "Product-state local vectors, e.g. '1,1;1,0' or '0.6,0:0.8'");
    gen_cmd->add_option("--seed", gen.seed, "Seed for random states");
    gen_cmd->add_option("-o,--out", gen.out, "Output path (default: stdout)");

    ComputeOptions comp;
    auto *comp_cmd = app.add_subcommand("compute", "Evaluate one measure on a state file");
    comp_cmd
        ->add_option("measure", comp.measure,
                     "concurrence2 | genconc2 | tangle3 | gentangle4 | detmeasure | singlet-overlap | husimi | "
                     "component-norms")
        ->required();
    comp_cmd->add_option("state", comp.state_path, "State file")->required();
    comp_cmd->add_option("--spec", comp.spec, "Singlets per party for singlet-overlap, e.g. s4b,s4b,s4c");
    comp_cmd->add_option("--proj", comp.proj, "Selectors per party for component-norms: sym, antisym, spin:<j>");
    comp_cmd->add_option("--q", comp.q, "Number of copies (husimi, component-norms)")->check(CLI::PositiveNumber);
    comp_cmd->add_flag("--strict", comp.strict, "Reject state files whose norm deviates from 1 by > 1e-6");
    comp_cmd->add_option("-o,--out", comp.out, "Report path (default: stdout)");

    std::string dec_path, dec_out;
    std::size_t dec_q = 2;
    bool dec_strict = false;
    auto *dec_cmd = app.add_subcommand("decompose", "Squared norms of all per-party irrep components");
    dec_cmd->add_option("state", dec_path, "State file")->required();
    dec_cmd->add_option("--q", dec_q, "Number of copies (> 2 for qubit states only)")->check(CLI::PositiveNumber);
    dec_cmd->add_flag("--strict", dec_strict, "Reject state files whose norm deviates from 1 by > 1e-6");
    dec_cmd->add_option("-o,--out", dec_out, "Report path (default: stdout)");

    AuditConfig audit_config;
    std::optional<std::uint64_t> audit_seed;
    std::string audit_out;
    auto *audit_cmd = app.add_subcommand("audit", "Run the randomized invariance and completeness suite");
    audit_cmd->add_option("--seed", audit_seed, "Master seed (required)");
    audit_cmd->add_option("--trials", audit_config.trials, "Group draws per state")->check(CLI::PositiveNumber);
    audit_cmd->add_option("--lu-tol", audit_config.lu_tolerance, "LU invariance tolerance");
    audit_cmd->add_option("--slocc-tol", audit_config.slocc_tolerance, "SLOCC invariance tolerance");
    audit_cmd->add_option("--cap", audit_config.condition_cap, "Condition-number cap for SLOCC draws");
    audit_cmd->add_option("-o,--out", audit_out, "Report path (default: stdout)");

    auto *singlets_cmd = app.add_subcommand("singlets", "Singlet tensor catalogue");
    std::string singlets_action;
    singlets_cmd->add_option("action", singlets_action, "list")->required()->check(CLI::IsMember({"list"}));

    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    Report report;
    report.command.assign(args.begin() + 1, args.end());
    try {
        if (*gen_cmd) {
            PureState s = generate(gen);
            std::string text = format_state(s);
            if (gen.out.empty()) {
                out << text;
            } else {
                emit(text, gen.out, out);
                report.input_digest = "sha256:" + sha256_hex(text);
                report.results.push_back({{"wrote", gen.out}, {"dims", s.dims()}});
                out << report.dump();
            }
            return kExitOk;
        }
        if (*comp_cmd) {
            auto input = read_state(comp.state_path, comp.strict);
            report.input_digest = input.digest;
            report.warnings = input.loaded.warnings;
            report.results.push_back(to_json(compute_measure(comp, input.loaded.state)));
            emit(report.dump(), comp.out, out);
            return kExitOk;
        }
        if (*dec_cmd) {
            auto input = read_state(dec_path, dec_strict);
            report.input_digest = input.digest;
            report.warnings = input.loaded.warnings;
            report.results.push_back(to_json(decompose(input.loaded.state, dec_q)));
            emit(report.dump(), dec_out, out);
            return kExitOk;
        }
        if (*audit_cmd) {
            if (!audit_seed) {
                throw UsageError("audit needs an explicit --seed");
            }
            audit_config.seed = *audit_seed;
            AuditReport result = run_canonical_suite(audit_config);
            std::string joined;
            for (const auto &p : inputs_for_digest(audit_config)) {
                joined += p + ";";
            }
            report.input_digest = "sha256:" + sha256_hex(joined);
            report.results.push_back(to_json(result));
            emit(report.dump(), audit_out, out);
            if (!result.all_passed()) {
                for (const auto &e : result.entries) {
                    if (!e.pass) {
                        err << "FAIL " << e.check << " " << e.quantity << " on " << e.state
                            << ": deviation " << fixed17(e.max_deviation) << " > " << fixed17(e.tolerance) << "\n";
                    }
                }
                return kExitAuditFailure;
            }
            return kExitOk;
        }
        if (*singlets_cmd) {
            for (const auto &s : builtin_singlets()) {
                report.results.push_back(to_json(s));
            }
            out << report.dump();
            return kExitOk;
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const CapacityError &e) {
        err << "capacity: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const InapplicableError &e) {
        err << "inapplicable: " << e.what() << "\n";
        return kExitInapplicable;
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const NormalizationError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ShapeError &e) {
        err << "error: " << e.what() << "\n";
        return *gen_cmd ? kExitInput : kExitInapplicable;
    }
    return kExitInput;
}

}  // namespace entmon
