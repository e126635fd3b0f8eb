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

#include "entmon/singlets.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "entmon/errors.hpp"

namespace entmon {

namespace {

void fill_exchange_signs(SingletTensor &s) {
    s.exchange_signs.clear();
    for (std::size_t k = 0; k + 1 < s.order; k++) {
        s.exchange_signs.push_back(exchange_sign(s.data, k));
    }
}

SingletTensor make(std::string name, std::size_t local_dim, DenseTensor data, std::string note = {}) {
    SingletTensor s;
    s.name = std::move(name);
    s.order = data.rank();
    s.local_dim = local_dim;
    s.data = std::move(data);
    s.note = std::move(note);
    fill_exchange_signs(s);
    return s;
}

double factorial(std::size_t n) {
    double f = 1;
    for (std::size_t k = 2; k <= n; k++) {
        f *= static_cast<double>(k);
    }
    return f;
}

}  // namespace

std::string_view to_string(ExchangeSign sign) {
    switch (sign) {
        case ExchangeSign::Symmetric:
            return "+1";
        case ExchangeSign::Antisymmetric:
            return "-1";
        case ExchangeSign::Mixed:
            return "mixed";
    }
    return "?";
}

ExchangeSign exchange_sign(const DenseTensor &t, std::size_t k) {
    std::vector<std::size_t> perm(t.rank());
    for (std::size_t a = 0; a < perm.size(); a++) {
        perm[a] = a;
    }
    std::swap(perm.at(k), perm.at(k + 1));
    DenseTensor swapped = permute_axes(t, perm);
    constexpr double tol = 1e-12;
    if (max_abs_diff(swapped, t) <= tol) {
        return ExchangeSign::Symmetric;
    }
    if (max_abs_diff(-1.0 * swapped, t) <= tol) {
        return ExchangeSign::Antisymmetric;
    }
    return ExchangeSign::Mixed;
}

SingletTensor s2() {
    DenseTensor eps = levi_civita(2);
    eps *= 1 / std::sqrt(2.0);
    return make("s2", 2, std::move(eps));
}

SingletTensor s3() {
    DenseTensor eps = levi_civita(3);
    eps *= 1 / std::sqrt(6.0);
    return make("s3", 3, std::move(eps));
}

SingletTensor s4a() {
    DenseTensor d(Shape(4, 2));
    double big = 1 / std::sqrt(3.0);
    double small = -1 / (2 * std::sqrt(3.0));
    d.at({1, 1, 0, 0}) = big;
    d.at({0, 0, 1, 1}) = big;
    d.at({1, 0, 1, 0}) = small;
    d.at({0, 1, 0, 1}) = small;
    d.at({1, 0, 0, 1}) = small;
    d.at({0, 1, 1, 0}) = small;
    return make("s4a", 2, std::move(d));
}

SingletTensor s4b() {
    DenseTensor eps = levi_civita(2);
    DenseTensor b = outer(eps, eps);
    b *= 0.5;
    return make("s4b", 2, std::move(b));
}

SingletTensor s4c() {
    DenseTensor eps = levi_civita(2);
    // eps_ik eps_jl as a tensor over (i, j, k, l)
    DenseTensor c = permute_axes(outer(eps, eps), {0, 2, 1, 3});
    c *= 0.5;
    return make("s4c", 2, std::move(c), "linearly dependent: s4c = (sqrt(3)/2) s4a + (1/2) s4b");
}

SingletTensor sN(std::size_t n) {
    DenseTensor eps = levi_civita(n);
    eps *= 1 / std::sqrt(factorial(n));
    return make("sN(" + std::to_string(n) + ")", n, std::move(eps));
}

SingletTensor singlet_by_name(std::string_view name) {
    if (name == "s2") return s2();
    if (name == "s3") return s3();
    if (name == "s4a") return s4a();
    if (name == "s4b") return s4b();
    if (name == "s4c") return s4c();
    if (name.starts_with("sN(") && name.ends_with(")")) {
        auto digits = name.substr(3, name.size() - 4);
        std::size_t n = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec == std::errc{} && ptr == digits.data() + digits.size() && n >= 2) {
            return sN(n);
        }
    }
    throw ParseError("unknown singlet '" + std::string(name) + "' (expected s2, s3, s4a, s4b, s4c or sN(k))");
}

std::vector<SingletTensor> builtin_singlets() {
    return {s2(), s3(), s4a(), s4b(), s4c(), sN(2), sN(3), sN(4)};
}

std::vector<DenseTensor> su_generators(std::size_t n) {
    std::vector<DenseTensor> out;
    for (std::size_t j = 0; j < n; j++) {
        for (std::size_t k = j + 1; k < n; k++) {
            DenseTensor sym({n, n});
            sym[j * n + k] = 1.0;
            sym[k * n + j] = 1.0;
            out.push_back(std::move(sym));
            DenseTensor anti({n, n});
            anti[j * n + k] = complex(0, -1);
            anti[k * n + j] = complex(0, 1);
            out.push_back(std::move(anti));
        }
    }
    for (std::size_t l = 1; l < n; l++) {
        DenseTensor diag({n, n});
        double scale = std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
        for (std::size_t j = 0; j < l; j++) {
            diag[j * n + j] = scale;
        }
        diag[l * n + l] = -scale * static_cast<double>(l);
        out.push_back(std::move(diag));
    }
    return out;
}

double annihilation_residual(const DenseTensor &t, std::size_t n) {
    for (auto e : t.shape()) {
        if (e != n) {
            throw ShapeError("annihilation_residual: every axis must have extent " + std::to_string(n));
        }
    }
    double worst = 0;
    for (const auto &gen : su_generators(n)) {
        DenseTensor acc(t.shape());
        for (std::size_t axis = 0; axis < t.rank(); axis++) {
            acc += apply_matrix(t, axis, gen);
        }
        worst = std::max(worst, norm(acc));
    }
    return worst;
}

std::size_t InvariantSpec::order() const { return parties.empty() ? 0 : parties.front().order; }

bool InvariantSpec::admissible() const {
    std::size_t q = order();
    for (std::size_t k = 0; k + 1 < q; k++) {
        int sign = 1;
        bool definite = true;
        for (const auto &p : parties) {
            switch (p.exchange_signs.at(k)) {
                case ExchangeSign::Symmetric:
                    break;
                case ExchangeSign::Antisymmetric:
                    sign = -sign;
                    break;
                case ExchangeSign::Mixed:
                    definite = false;
                    break;
            }
        }
        if (definite && sign < 0) {
            return false;
        }
    }
    return true;
}

std::string InvariantSpec::describe() const {
    std::string out;
    for (std::size_t j = 0; j < parties.size(); j++) {
        out += (j ? "," : "") + parties[j].name;
    }
    return out;
}

InvariantSpec InvariantSpec::parse(std::string_view list) {
    InvariantSpec spec;
    while (!list.empty()) {
        // sN(k) contains no comma, so a plain split is enough
        auto comma = list.find(',');
        auto name = list.substr(0, comma);
        auto first = name.find_first_not_of(" \t");
        auto last = name.find_last_not_of(" \t");
        name = first == std::string_view::npos ? std::string_view{} : name.substr(first, last - first + 1);
        spec.parties.push_back(singlet_by_name(name));
        if (comma == std::string_view::npos) {
            break;
        }
        list.remove_prefix(comma + 1);
    }
    if (spec.parties.empty()) {
        throw ParseError("empty singlet list");
    }
    for (const auto &p : spec.parties) {
        if (p.order != spec.order()) {
            throw ParseError("singlets of mixed order in one spec: " + spec.describe());
        }
    }
    return spec;
}

InvariantSpec InvariantSpec::uniform(const SingletTensor &s, std::size_t parties) {
    return InvariantSpec{std::vector<SingletTensor>(parties, s)};
}

complex overlap_unchecked(const InvariantSpec &spec, const PureState &s) {
    std::size_t m = s.parties();
    if (spec.parties.size() != m) {
        throw ShapeError("spec has " + std::to_string(spec.parties.size()) + " singlets for a " + std::to_string(m) +
                         "-party state");
    }
    std::size_t q = spec.order();
    for (std::size_t j = 0; j < m; j++) {
        const auto &p = spec.parties[j];
        if (p.order != q) {
            throw ShapeError("singlets of mixed order in one spec: " + spec.describe());
        }
        if (p.local_dim != s.dims()[j]) {
            throw ShapeError("singlet " + p.name + " acts on dimension " + std::to_string(p.local_dim) + " but party " +
                             std::to_string(j) + " has dimension " + std::to_string(s.dims()[j]));
        }
    }
    Shape full;
    for (std::size_t k = 0; k < q * m; k++) {
        full.push_back(s.dims()[k % m]);
    }
    checked_entry_count(full);

    // party-major product: axis j*q + k is copy k of party j
    DenseTensor product = spec.parties[0].data;
    for (std::size_t j = 1; j < m; j++) {
        product = outer(product, spec.parties[j].data);
    }
    std::vector<std::size_t> perm(q * m);
    for (std::size_t k = 0; k < q; k++) {
        for (std::size_t j = 0; j < m; j++) {
            perm[k * m + j] = j * q + k;
        }
    }
    return inner(permute_axes(product, perm), copies(s, q));
}

OverlapResult overlap(const InvariantSpec &spec, const PureState &s) {
    complex value = overlap_unchecked(spec, s);
    if (!spec.admissible()) {
        return {complex{}, false};
    }
    return {value, true};
}

}  // namespace entmon
