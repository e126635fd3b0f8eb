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

#include <gtest/gtest.h>

#include <cmath>

#include "entmon/errors.hpp"
#include "oracles.hpp"

using namespace entmon;

namespace {

std::vector<std::size_t> all_axes(std::size_t n) {
    std::vector<std::size_t> axes(n);
    for (std::size_t k = 0; k < n; k++) axes[k] = k;
    return axes;
}

DenseTensor basis(const Shape &shape, std::initializer_list<std::size_t> idx) {
    DenseTensor t(shape);
    t.at(idx) = 1;
    return t;
}

}  // namespace

TEST(projectors, selector_parse) {
    ASSERT_EQ(Selector::parse("sym"), Selector::sym());
    ASSERT_EQ(Selector::parse("+"), Selector::sym());
    ASSERT_EQ(Selector::parse("antisym"), Selector::antisym());
    ASSERT_EQ(Selector::parse("-"), Selector::antisym());
    ASSERT_EQ(Selector::parse("spin:1"), Selector::spin(2));
    ASSERT_EQ(Selector::parse("spin:3/2"), Selector::spin(3));
    ASSERT_EQ(Selector::parse("spin:1.5"), Selector::spin(3));
    ASSERT_EQ(Selector::parse("spin:0"), Selector::spin(0));
    ASSERT_THROW(Selector::parse("spin:1/3"), ParseError);
    ASSERT_THROW(Selector::parse("spin:0.7"), ParseError);
    ASSERT_THROW(Selector::parse("both"), ParseError);
    ASSERT_EQ(ProjectorSpec::parse(2, "-,-,+").describe(), "antisym,antisym,sym");
}

TEST(projectors, sym_and_antisym_on_two_qubits) {
    auto axes = all_axes(2);
    DenseTensor s = symmetrizer_apply(basis({2, 2}, {0, 1}), axes);
    ASSERT_EQ(s.at({0, 1}), complex(0.5));
    ASSERT_EQ(s.at({1, 0}), complex(0.5));
    DenseTensor a = antisymmetrizer_apply(basis({2, 2}, {0, 0}), axes);
    ASSERT_EQ(norm(a), 0);
    DenseTensor a01 = antisymmetrizer_apply(basis({2, 2}, {0, 1}), axes);
    ASSERT_EQ(a01.at({0, 1}), complex(0.5));
    ASSERT_EQ(a01.at({1, 0}), complex(-0.5));
}

TEST(projectors, idempotent_and_orthogonal) {
    for (std::uint64_t k = 0; k < 5; k++) {
        DenseTensor t = oracle::random_state_for_test({3, 3, 3}, 4, k).amps();
        auto axes = all_axes(3);
        DenseTensor s = symmetrizer_apply(t, axes);
        DenseTensor a = antisymmetrizer_apply(t, axes);
        ASSERT_LE(max_abs_diff(symmetrizer_apply(s, axes), s), 1e-15);
        ASSERT_LE(max_abs_diff(antisymmetrizer_apply(a, axes), a), 1e-15);
        ASSERT_LE(norm(symmetrizer_apply(a, axes)), 1e-15);
        ASSERT_LE(norm(antisymmetrizer_apply(s, axes)), 1e-15);
        ASSERT_LE(std::abs(inner(s, a)), 1e-15);
    }
}

TEST(projectors, partial_axes) {
    // symmetrize axes 0 and 2 of a rank-3 tensor
    std::vector<std::size_t> axes = {0, 2};
    DenseTensor s = symmetrizer_apply(basis({2, 2, 2}, {0, 1, 1}), axes);
    ASSERT_EQ(s.at({0, 1, 1}), complex(0.5));
    ASSERT_EQ(s.at({1, 1, 0}), complex(0.5));
    ASSERT_THROW(symmetrizer_apply(DenseTensor({2, 3}), all_axes(2)), ShapeError);
}

TEST(projectors, casimir_eigenvalues) {
    // |0000> has j = 2, so J^2 = 6
    DenseTensor up = basis({2, 2, 2, 2}, {0, 0, 0, 0});
    ASSERT_LE(max_abs_diff(casimir_apply(up, all_axes(4)), complex(6) * up), 1e-15);
    // a two-qubit singlet has J^2 = 0
    DenseTensor singlet({2, 2}, {0, 1, -1, 0});
    ASSERT_LE(norm(casimir_apply(singlet, all_axes(2))), 1e-15);
}

TEST(projectors, admissible_spins) {
    ASSERT_EQ(admissible_twice_spins(2), (std::vector<int>{2, 0}));
    ASSERT_EQ(admissible_twice_spins(3), (std::vector<int>{3, 1}));
    ASSERT_EQ(admissible_twice_spins(4), (std::vector<int>{4, 2, 0}));
}

TEST(projectors, spin_at_q2_matches_sym_and_antisym) {
    auto axes = all_axes(2);
    for (std::uint64_t k = 0; k < 5; k++) {
        DenseTensor t = oracle::random_state_for_test({2, 2}, 6, k).amps();
        ASSERT_LE(max_abs_diff(spin_projector_apply(t, axes, 2), symmetrizer_apply(t, axes)), 1e-14);
        ASSERT_LE(max_abs_diff(spin_projector_apply(t, axes, 0), antisymmetrizer_apply(t, axes)), 1e-14);
    }
}

TEST(projectors, spin_projectors_resolve_identity) {
    for (std::size_t q = 2; q <= 5; q++) {
        Shape shape(q, 2);
        auto axes = all_axes(q);
        for (std::uint64_t k = 0; k < 3; k++) {
            DenseTensor t = oracle::random_state_for_test(shape, 7 + q, k).amps();
            DenseTensor sum(shape);
            std::vector<DenseTensor> parts;
            for (int twice_j : admissible_twice_spins(q)) {
                parts.push_back(spin_projector_apply(t, axes, twice_j));
                ASSERT_LE(max_abs_diff(spin_projector_apply(parts.back(), axes, twice_j), parts.back()), 1e-12);
                sum += parts.back();
            }
            ASSERT_LE(max_abs_diff(sum, t), 1e-12);
            for (std::size_t a = 0; a < parts.size(); a++) {
                for (std::size_t b = a + 1; b < parts.size(); b++) {
                    ASSERT_LE(std::abs(inner(parts[a], parts[b])), 1e-12);
                }
            }
            // the top spin is the symmetric subspace
            ASSERT_LE(max_abs_diff(parts.front(), symmetrizer_apply(t, axes)), 1e-12);
        }
    }
}

TEST(projectors, spin2_fixes_all_up) {
    DenseTensor up = basis({2, 2, 2, 2}, {0, 0, 0, 0});
    ASSERT_LE(max_abs_diff(spin_projector_apply(up, all_axes(4), 4), up), 1e-15);
    ASSERT_LE(norm(spin_projector_apply(up, all_axes(4), 2)), 1e-15);
    ASSERT_LE(norm(spin_projector_apply(up, all_axes(4), 0)), 1e-15);
}

TEST(projectors, spec_check) {
    ProjectorSpec::parse(2, "-,-,+").check({2, 2, 2});
    ProjectorSpec::parse(3, "spin:3/2,spin:1/2").check({2, 2});
    ProjectorSpec::parse(3, "antisym,sym").check({3, 2});
    ASSERT_THROW(ProjectorSpec::parse(3, "antisym,sym").check({2, 2}), InapplicableError);
    ASSERT_THROW(ProjectorSpec::parse(3, "spin:1,sym").check({2, 2}), InapplicableError);
    ASSERT_THROW(ProjectorSpec::parse(4, "spin:3,sym").check({2, 2}), InapplicableError);
    ASSERT_THROW(ProjectorSpec::parse(2, "spin:1,sym").check({3, 2}), InapplicableError);
    ASSERT_THROW(ProjectorSpec::parse(2, "sym,sym").check({2, 2, 2}), InapplicableError);
}

TEST(projectors, component_norms_of_canonical_states) {
    ProjectorSpec mmp = ProjectorSpec::parse(2, "-,-,+");
    double g = component_norm(ghz(3), mmp);
    double w = component_norm(w_state(3), mmp);
    ASSERT_NEAR(g * g, 1.0 / 8, 1e-15);
    ASSERT_NEAR(w * w, 1.0 / 9, 1e-15);
    ASSERT_NEAR(oracle::component_sq_explicit(ghz(3), {true, true, false}), 1.0 / 8, 1e-15);
    ASSERT_NEAR(oracle::component_sq_explicit(w_state(3), {true, true, false}), 1.0 / 9, 1e-15);

    // a single antisym party on two qubits
    for (auto spec : {"-,+", "+,-"}) {
        ASSERT_LE(component_norm(bell(), ProjectorSpec::parse(2, spec)), 1e-15);
    }
    ASSERT_NEAR(std::pow(component_norm(bell(), ProjectorSpec::parse(2, "-,-")), 2), 0.25, 1e-15);
}

TEST(projectors, component_norms_match_explicit_oracle) {
    for (Shape dims : {Shape{2, 2}, Shape{2, 3}, Shape{2, 2, 2}, Shape{3, 3}}) {
        std::size_t m = dims.size();
        for (std::uint64_t k = 0; k < 3; k++) {
            PureState s = oracle::random_state_for_test(dims, 31, k);
            for (unsigned mask = 0; mask < (1u << m); mask++) {
                ProjectorSpec spec{2, {}};
                std::vector<bool> anti(m);
                for (std::size_t j = 0; j < m; j++) {
                    anti[j] = (mask >> j) & 1;
                    spec.parties.push_back(anti[j] ? Selector::antisym() : Selector::sym());
                }
                double fast = std::pow(component_norm(s, spec), 2);
                ASSERT_NEAR(fast, oracle::component_sq_explicit(s, anti), 1e-14);
            }
        }
    }
}

TEST(projectors, husimi_moment) {
    Rng rng(44);
    for (std::size_t q = 2; q <= 4; q++) {
        for (int k = 0; k < 5; k++) {
            ASSERT_NEAR(husimi_moment(random_product_state({2, 3, 2}, rng), q), 1, 1e-12);
        }
    }
    ASSERT_NEAR(husimi_moment(bell(), 2), 0.75, 1e-15);
    ASSERT_NEAR(oracle::husimi2_swap_identity(bell()), 0.75, 1e-15);
    ASSERT_LT(husimi_moment(ghz(3), 2), 1 - 1e-6);
    ASSERT_LT(husimi_moment(w_state(3), 3), 1 - 1e-6);
    for (std::uint64_t k = 0; k < 5; k++) {
        PureState s = oracle::random_state_for_test({2, 3, 2}, 12, k);
        ASSERT_NEAR(husimi_moment(s, 2), oracle::husimi2_swap_identity(s), 1e-14);
    }
}

TEST(projectors, decomposition_q2_is_complete) {
    for (Shape dims : {Shape{2, 2}, Shape{2, 2, 2}, Shape{3, 2}, Shape{2, 2, 2, 2}}) {
        PureState s = oracle::random_state_for_test(dims, 13, 0);
        Decomposition d = decompose(s, 2);
        ASSERT_EQ(d.rows.size(), std::size_t{1} << dims.size());
        ASSERT_NEAR(d.total, 1, 1e-12);
        for (const auto &row : d.rows) {
            std::size_t odd = 0;
            for (const auto &sel : row.spec.parties) odd += sel.kind == Selector::Kind::Antisym;
            if (odd % 2 == 1) {
                ASSERT_LE(row.squared_norm, 1e-14) << row.spec.describe();
            }
        }
    }
}

TEST(projectors, decomposition_spin) {
    PureState s = oracle::random_state_for_test({2, 2, 2}, 14, 0);
    Decomposition d = decompose(s, 3);
    ASSERT_EQ(d.rows.size(), 8u);
    ASSERT_NEAR(d.total, 1, 1e-12);
    Decomposition d4 = decompose(bell(), 4);
    ASSERT_EQ(d4.rows.size(), 9u);
    ASSERT_NEAR(d4.total, 1, 1e-12);
    ASSERT_THROW(decompose(max_entangled_qudit(3), 3), InapplicableError);
    Decomposition d1 = decompose(bell(), 1);
    ASSERT_EQ(d1.rows.size(), 1u);
    ASSERT_NEAR(d1.total, 1, 1e-15);
    ASSERT_THROW(decompose(bell(), 0), InapplicableError);
}
