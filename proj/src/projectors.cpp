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

#include "entmon/projectors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include "entmon/errors.hpp"

namespace entmon {

namespace {

void check_axes(const DenseTensor &t, std::span<const std::size_t> axes) {
    if (axes.empty()) {
        throw ShapeError("projector needs at least one axis");
    }
    std::vector<bool> used(t.rank(), false);
    for (auto a : axes) {
        if (a >= t.rank() || used[a]) {
            throw ShapeError("projector axes must be distinct and in range");
        }
        used[a] = true;
        if (t.extent(a) != t.extent(axes[0])) {
            throw ShapeError("projector axes must share one extent");
        }
    }
}

DenseTensor permutation_average(const DenseTensor &t, std::span<const std::size_t> axes, bool signed_sum) {
    check_axes(t, axes);
    std::vector<std::size_t> sigma(axes.size());
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<std::size_t> perm(t.rank());
    DenseTensor acc(t.shape());
    double count = 0;
    do {
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = 0; i < axes.size(); i++) {
            perm[axes[i]] = axes[sigma[i]];
        }
        DenseTensor term = permute_axes(t, perm);
        if (signed_sum && permutation_sign(sigma) < 0) {
            acc -= term;
        } else {
            acc += term;
        }
        count += 1;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    acc *= 1 / count;
    return acc;
}

double casimir_value(int twice_j) { return twice_j * (twice_j + 2) / 4.0; }

std::vector<std::size_t> party_axes(std::size_t party, std::size_t parties, std::size_t q) {
    std::vector<std::size_t> axes;
    for (std::size_t k = 0; k < q; k++) {
        axes.push_back(k * parties + party);
    }
    return axes;
}

}  // namespace

Selector Selector::parse(std::string_view text) {
    if (text == "sym" || text == "+") return sym();
    if (text == "antisym" || text == "-") return antisym();
    if (text.starts_with("spin:")) {
        auto value = text.substr(5);
        auto slash = value.find('/');
        if (slash != std::string_view::npos) {
            int num = 0;
            auto num_part = value.substr(0, slash);
            auto den_part = value.substr(slash + 1);
            auto [p, ec] = std::from_chars(num_part.data(), num_part.data() + num_part.size(), num);
            if (ec == std::errc{} && p == num_part.data() + num_part.size() && den_part == "2" && num >= 0) {
                return spin(num);
            }
        } else {
            double j = 0;
            auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), j);
            double twice = 2 * j;
            if (ec == std::errc{} && p == value.data() + value.size() && j >= 0 && twice == std::round(twice)) {
                return spin(static_cast<int>(twice));
            }
        }
    }
    throw ParseError("unknown projector selector '" + std::string(text) + "' (expected sym, antisym or spin:<j>)");
}

std::string Selector::describe() const {
    switch (kind) {
        case Kind::Sym:
            return "sym";
        case Kind::Antisym:
            return "antisym";
        case Kind::Spin:
            return twice_j % 2 == 0 ? "spin:" + std::to_string(twice_j / 2) : "spin:" + std::to_string(twice_j) + "/2";
    }
    return "?";
}

void ProjectorSpec::check(const Shape &dims) const {
    if (parties.size() != dims.size()) {
        throw InapplicableError("projector spec has " + std::to_string(parties.size()) + " selectors for a " +
                                std::to_string(dims.size()) + "-party state");
    }
    if (q < 1) {
        throw InapplicableError("projector order q must be >= 1");
    }
    for (std::size_t j = 0; j < dims.size(); j++) {
        const auto &sel = parties[j];
        if (sel.kind == Selector::Kind::Spin) {
            if (dims[j] != 2) {
                throw InapplicableError("spin selector on party " + std::to_string(j) + " of dimension " +
                                        std::to_string(dims[j]));
            }
            auto allowed = admissible_twice_spins(q);
            if (std::find(allowed.begin(), allowed.end(), sel.twice_j) == allowed.end()) {
                throw InapplicableError(sel.describe() + " is not a total spin of " + std::to_string(q) + " qubits");
            }
        }
        if (sel.kind == Selector::Kind::Antisym && q > dims[j]) {
            throw InapplicableError("antisym on " + std::to_string(q) + " copies of a dimension-" +
                                    std::to_string(dims[j]) + " party is empty");
        }
    }
}

std::string ProjectorSpec::describe() const {
    std::string out;
    for (std::size_t j = 0; j < parties.size(); j++) {
        out += (j ? "," : "") + parties[j].describe();
    }
    return out;
}

ProjectorSpec ProjectorSpec::parse(std::size_t q, std::string_view list) {
    ProjectorSpec spec{q, {}};
    while (!list.empty()) {
        auto comma = list.find(',');
        spec.parties.push_back(Selector::parse(list.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        list.remove_prefix(comma + 1);
    }
    if (spec.parties.empty()) {
        throw ParseError("empty projector list");
    }
    return spec;
}

DenseTensor symmetrizer_apply(const DenseTensor &t, std::span<const std::size_t> axes) {
    return permutation_average(t, axes, false);
}

DenseTensor antisymmetrizer_apply(const DenseTensor &t, std::span<const std::size_t> axes) {
    return permutation_average(t, axes, true);
}

DenseTensor casimir_apply(const DenseTensor &t, std::span<const std::size_t> axes) {
    check_axes(t, axes);
    if (t.extent(axes[0]) != 2) {
        throw ShapeError("total spin is defined on qubit axes only");
    }
    double q = static_cast<double>(axes.size());
    DenseTensor out = t;
    out *= q * (4 - q) / 4;
    std::vector<std::size_t> perm(t.rank());
    for (std::size_t r = 0; r < axes.size(); r++) {
        for (std::size_t s = r + 1; s < axes.size(); s++) {
            std::iota(perm.begin(), perm.end(), 0);
            std::swap(perm[axes[r]], perm[axes[s]]);
            out += permute_axes(t, perm);
        }
    }
    return out;
}

std::vector<int> admissible_twice_spins(std::size_t q) {
    std::vector<int> out;
    for (int tj = static_cast<int>(q); tj >= 0; tj -= 2) {
        out.push_back(tj);
    }
    return out;
}

DenseTensor spin_projector_apply(const DenseTensor &t, std::span<const std::size_t> axes, int twice_j) {
    auto allowed = admissible_twice_spins(axes.size());
    if (std::find(allowed.begin(), allowed.end(), twice_j) == allowed.end()) {
        throw InapplicableError("2j = " + std::to_string(twice_j) + " is not a total spin of " +
                                std::to_string(axes.size()) + " qubits");
    }
    check_axes(t, axes);
    DenseTensor out = t;
    double target = casimir_value(twice_j);
    for (int other : allowed) {
        if (other == twice_j) {
            continue;
        }
        double c = casimir_value(other);
        DenseTensor next = casimir_apply(out, axes);
        out *= -c;
        next += out;
        next *= 1 / (target - c);
        out = std::move(next);
    }
    return out;
}

DenseTensor project_copies(const PureState &s, const ProjectorSpec &spec) {
    spec.check(s.dims());
    std::size_t m = s.parties();
    DenseTensor t = copies(s, spec.q);
    for (std::size_t j = 0; j < m; j++) {
        auto axes = party_axes(j, m, spec.q);
        const auto &sel = spec.parties[j];
        switch (sel.kind) {
            case Selector::Kind::Sym:
                if (spec.q > 1) {
                    t = symmetrizer_apply(t, axes);
                }
                break;
            case Selector::Kind::Antisym:
                t = antisymmetrizer_apply(t, axes);
                break;
            case Selector::Kind::Spin:
                t = spin_projector_apply(t, axes, sel.twice_j);
                break;
        }
    }
    return t;
}

double component_norm(const PureState &s, const ProjectorSpec &spec) { return norm(project_copies(s, spec)); }

double husimi_moment(const PureState &s, std::size_t q) {
    ProjectorSpec spec{q, std::vector<Selector>(s.parties(), Selector::sym())};
    double n = component_norm(s, spec);
    return n * n;
}

Decomposition decompose(const PureState &s, std::size_t q) {
    std::size_t m = s.parties();
    std::vector<std::vector<Selector>> choices(m);
    if (q == 2) {
        for (auto &c : choices) {
            c = {Selector::sym(), Selector::antisym()};
        }
    } else {
        if (!s.all_qubits()) {
            throw InapplicableError("decomposition beyond q = 2 is available for qubit parties only");
        }
        for (auto &c : choices) {
            for (int tj : admissible_twice_spins(q)) {
                c.push_back(Selector::spin(tj));
            }
        }
    }
    Decomposition out;
    out.q = q;
    std::vector<std::size_t> pick(m, 0);
    while (true) {
        ProjectorSpec spec{q, {}};
        for (std::size_t j = 0; j < m; j++) {
            spec.parties.push_back(choices[j][pick[j]]);
        }
        double n = component_norm(s, spec);
        out.rows.push_back({spec, n * n});
        out.total += n * n;
        std::size_t j = m;
        while (j > 0) {
            j--;
            if (++pick[j] < choices[j].size()) {
                break;
            }
            pick[j] = 0;
            if (j == 0) {
                return out;
            }
        }
    }
}

}  // namespace entmon
