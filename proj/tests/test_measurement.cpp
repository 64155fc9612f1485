// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "qcorr/entropy.hpp"
#include "qcorr/error.hpp"
#include "qcorr/measurement.hpp"
#include "qcorr/scenario.hpp"
#include "test_support.hpp"

using namespace qcorr;
using namespace qcorr::testing;

namespace {

constexpr double kPi = std::numbers::pi;

DensityMatrix classical_ac() {
    return partial_trace(density_from_pure(ghz3()), SubsystemSet{1});
}

DensityMatrix bell() {
    const double h = 1.0 / std::sqrt(2.0);
    return density_from_pure(PureState({h, 0.0, 0.0, h}, {2, 2}));
}

ErrorCode code_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

} // namespace

TEST(ProjectivePair, ZBasisAndXBasis) {
    const auto z = projective_pair({0.0, 0.0});
    EXPECT_LT(frobenius_distance(z.effects()[0], ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}), 1e-15);
    EXPECT_LT(frobenius_distance(z.effects()[1], ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}}), 1e-15);
    const auto x = projective_pair({kPi / 2.0, 0.0});
    EXPECT_LT(frobenius_distance(x.effects()[0], ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}}), 1e-15);
    EXPECT_LT(frobenius_distance(x.effects()[1], ComplexMatrix{{0.5, -0.5}, {-0.5, 0.5}}), 1e-15);
}

TEST(ProjectivePair, CompleteAndIdempotent) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> theta(0.0, kPi), phi(0.0, 2.0 * kPi);
    for (int i = 0; i < 200; ++i) {
        const auto povm = projective_pair({theta(rng), phi(rng)});
        const auto &e = povm.effects();
        EXPECT_LT(frobenius_distance(e[0] + e[1], ComplexMatrix::identity(2)), 1e-12);
        EXPECT_LT(frobenius_distance(e[0] * e[0], e[0]), 1e-12);
        EXPECT_LT(frobenius_norm(e[0] * e[1]), 1e-12);
    }
    EXPECT_EQ(code_of([] { projective_pair({-0.1, 0.0}); }), ErrorCode::OutOfRange);
    EXPECT_EQ(code_of([] { projective_pair({0.0, 2.0 * kPi}); }), ErrorCode::OutOfRange);
}

TEST(BlochAngles, CanonicalFoldsIntoRange) {
    const auto a = BlochAngles::canonical(-kPi / 4.0, 0.0);
    EXPECT_NEAR(a.theta, kPi / 4.0, 1e-12);
    EXPECT_NEAR(a.phi, kPi, 1e-12);
    const auto b = BlochAngles::canonical(kPi / 3.0, -kPi / 2.0);
    EXPECT_NEAR(b.phi, 1.5 * kPi, 1e-12);
}

TEST(Povm, ValidatesEffects) {
    EXPECT_EQ(code_of([] { Povm({ComplexMatrix::identity(2), ComplexMatrix::identity(2)}); }),
              ErrorCode::InvalidPovm);
    const ComplexMatrix neg{{1.5, 0.0}, {0.0, 0.5}};
    const ComplexMatrix comp{{-0.5, 0.0}, {0.0, 0.5}};
    EXPECT_EQ(code_of([&] { Povm({neg, comp}); }), ErrorCode::InvalidPovm);
    EXPECT_EQ(code_of([] { Povm({ComplexMatrix::identity(2), ComplexMatrix(3)}); }),
              ErrorCode::InvalidPovm);
    EXPECT_NO_THROW(Povm({ComplexMatrix::identity(2)}));
}

TEST(TrinePovm, CompleteForAnyOrientation) {
    for (int i = 0; i < 20; ++i) {
        const auto povm = trine_povm(0.3 * i, 0.17 * i, 0.11 * i);
        ComplexMatrix sum(2);
        for (const auto &e : povm.effects()) {
            sum = sum + e;
            EXPECT_GE(eigvals_hermitian(e).front(), -1e-12);
        }
        EXPECT_LT(frobenius_distance(sum, ComplexMatrix::identity(2)), 1e-12);
    }
}

TEST(MeasureSubsystem, ClassicalStateZBasis) {
    const auto outcomes = measure_subsystem(classical_ac(), projective_pair({0.0, 0.0}), 1);
    ASSERT_EQ(outcomes.size(), 2u);
    EXPECT_NEAR(outcomes[0].probability, 0.5, 1e-15);
    EXPECT_NEAR(outcomes[1].probability, 0.5, 1e-15);
    EXPECT_LT(frobenius_distance(outcomes[0].conditional_state->matrix(),
                                 ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}),
              1e-15);
    EXPECT_LT(frobenius_distance(outcomes[1].conditional_state->matrix(),
                                 ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}}),
              1e-15);
}

TEST(MeasureSubsystem, ClassicalStateXBasis) {
    const auto outcomes = measure_subsystem(classical_ac(), projective_pair({kPi / 2.0, 0.0}), 1);
    for (const auto &o : outcomes) {
        EXPECT_NEAR(o.probability, 0.5, 1e-15);
        EXPECT_LT(frobenius_distance(o.conditional_state->matrix(),
                                     Complex(0.5) * ComplexMatrix::identity(2)),
                  1e-15);
    }
}

TEST(MeasureSubsystem, MatchesEmbeddedOperatorDefinition) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> theta(0.0, kPi), phi(0.0, 2.0 * kPi);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto rho = random_two_qubit_state(seed);
        const auto povm = projective_pair({theta(rng), phi(rng)});
        for (std::size_t target : {0u, 1u}) {
            const auto outcomes = measure_subsystem(rho, povm, target);
            double total = 0.0;
            for (std::size_t i = 0; i < outcomes.size(); ++i) {
                const std::size_t two[] = {2, 2};
                const auto embedded = embed_local(povm.effects()[i], target, two);
                const auto weighted = embedded * rho.matrix();
                const double p = weighted.trace().real();
                EXPECT_NEAR(outcomes[i].probability, p, 1e-12);
                const auto reduced = partial_trace(
                    DensityMatrix::from_trusted(Complex(1.0 / p) * weighted, {2, 2}),
                    SubsystemSet{target});
                EXPECT_LT(max_abs_diff(outcomes[i].conditional_state->matrix(), reduced.matrix()),
                          1e-12);
                EXPECT_NO_THROW(DensityMatrix::validate(outcomes[i].conditional_state->matrix(),
                                                        outcomes[i].conditional_state->dims()));
                total += outcomes[i].probability;
            }
            EXPECT_NEAR(total, 1.0, 1e-12);
        }
    }
}

TEST(MeasureSubsystem, ZeroProbabilityOutcomeIsFlagged) {
    const auto zero = density_from_pure(PureState({1.0, 0.0, 0.0, 0.0}, {2, 2}));
    const auto outcomes = measure_subsystem(zero, projective_pair({0.0, 0.0}), 1);
    EXPECT_FALSE(outcomes[0].zero_probability());
    EXPECT_TRUE(outcomes[1].zero_probability());
    EXPECT_EQ(outcomes[1].probability, 0.0);
    EXPECT_NEAR(conditional_entropy(zero, projective_pair({0.0, 0.0}), 1), 0.0, 1e-15);
}

TEST(MeasureSubsystem, RejectsMismatchedPovm) {
    const Povm qutrit({ComplexMatrix::identity(3)});
    EXPECT_EQ(code_of([&] { measure_subsystem(classical_ac(), qutrit, 0); }),
              ErrorCode::DimMismatch);
    EXPECT_EQ(code_of([&] { measure_subsystem(classical_ac(), projective_pair({0.0, 0.0}), 2); }),
              ErrorCode::DimMismatch);
}

TEST(MeasureSubsystem, QuditNeighbour) {
    const auto rho = partial_trace(density_from_pure(random_pure_state({2, 4, 2}, 3)),
                                   SubsystemSet{2});
    const auto outcomes = measure_subsystem(rho, projective_pair({1.0, 2.0}), 0);
    double total = 0.0;
    for (const auto &o : outcomes) {
        EXPECT_EQ(o.conditional_state->dims(), (Dims{4}));
        total += o.probability;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(ConditionalEntropy, ClassicalState) {
    EXPECT_NEAR(conditional_entropy(classical_ac(), projective_pair({0.0, 0.0}), 1), 0.0, 1e-15);
    EXPECT_NEAR(conditional_entropy(classical_ac(), projective_pair({kPi / 2.0, 0.0}), 1), 1.0,
                1e-12);
}

TEST(ConditionalEntropy, BellStateAnyBasisIsZero) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> theta(0.0, kPi), phi(0.0, 2.0 * kPi);
    for (int i = 0; i < 50; ++i) {
        const auto povm = projective_pair({theta(rng), phi(rng)});
        EXPECT_NEAR(conditional_entropy(bell(), povm, 0), 0.0, 1e-9);
        EXPECT_NEAR(conditional_entropy(bell(), povm, 1), 0.0, 1e-9);
    }
}

TEST(ConditionalEntropy, BoundedByUnmeasuredDimension) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Bits h = conditional_entropy(random_two_qubit_state(seed),
                                           projective_pair({0.4, 1.3}), 1);
        EXPECT_GE(h, -1e-12);
        EXPECT_LE(h, 1.0 + 1e-12);
    }
}

TEST(ApplyFilter, GhzWithEGivesFilteredState) {
    const auto filtered = apply_filter(ghz3(), filter_e(), 2);
    const double h = 1.0 / std::sqrt(2.0);
    // (|000> + |11+>)/sqrt2
    const std::vector<Complex> expected{h, 0.0, 0.0, 0.0, 0.0, 0.0, 0.5, 0.5};
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_NEAR(std::abs(filtered.amplitudes()[i] - expected[i]), 0.0, 1e-15) << i;
    }
    // E preserves the GHZ norm exactly, so no renormalization happens.
    const auto raw = qcorr::apply(kron(ComplexMatrix::identity(4), filter_e()), ghz3().amplitudes());
    double norm2 = 0.0;
    for (const auto &z : raw) norm2 += std::norm(z);
    EXPECT_NEAR(norm2, 1.0, 1e-15);

    const auto rho_ac = partial_trace(density_from_pure(filtered), SubsystemSet{1});
    // (|00><00| + |1+><1+|)/2
    const ComplexMatrix expected_ac{{0.5, 0.0, 0.0, 0.0},
                            {0.0, 0.0, 0.0, 0.0},
                            {0.0, 0.0, 0.25, 0.25},
                            {0.0, 0.0, 0.25, 0.25}};
    EXPECT_LT(frobenius_distance(rho_ac.matrix(), expected_ac), 1e-15);
}

TEST(ApplyFilter, DensityMatrixRoute) {
    const auto rho = density_from_pure(ghz3());
    const auto via_rho = apply_filter(rho, filter_e(), 2);
    const auto via_psi = density_from_pure(apply_filter(ghz3(), filter_e(), 2));
    EXPECT_LT(frobenius_distance(via_rho.matrix(), via_psi.matrix()), 1e-14);
    EXPECT_NEAR(purity(via_rho), 1.0, 1e-9);
}

TEST(ApplyFilter, IdentityAndAnnihilation) {
    const auto psi = random_pure_state({2, 2}, 8);
    const auto same = apply_filter(psi, ComplexMatrix::identity(2), 1);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(std::abs(same.amplitudes()[i] - psi.amplitudes()[i]), 0.0, 1e-15);
    }
    const ComplexMatrix p0{{1.0, 0.0}, {0.0, 0.0}};
    EXPECT_EQ(code_of([&] { apply_filter(PureState({0.0, 1.0}, {2}), p0, 0); }),
              ErrorCode::StateAnnihilated);
    const auto one = density_from_pure(PureState({0.0, 1.0}, {2}));
    EXPECT_EQ(code_of([&] { apply_filter(one, p0, 0); }), ErrorCode::StateAnnihilated);
}

TEST(ApplyGlobalOperator, MabReproducesLocalFilter) {
    const auto via_e = density_from_pure(apply_filter(ghz3(), filter_e(), 2));
    const auto via_m = density_from_pure(
        apply_global_operator(ghz3(), kron(operator_mab(), ComplexMatrix::identity(2))));
    EXPECT_LE(frobenius_distance(via_e.matrix(), via_m.matrix()), 1e-12);
}

TEST(ApplyGlobalOperator, IdentityAndZero) {
    const auto rho = density_from_pure(random_pure_state({2, 2, 2}, 1));
    EXPECT_LT(frobenius_distance(apply_global_operator(rho, ComplexMatrix::identity(8)).matrix(),
                                 rho.matrix()),
              1e-15);
    EXPECT_EQ(code_of([&] { apply_global_operator(rho, ComplexMatrix(8)); }),
              ErrorCode::StateAnnihilated);
    EXPECT_EQ(code_of([&] { apply_global_operator(random_pure_state({2, 2, 2}, 1), ComplexMatrix(8)); }),
              ErrorCode::StateAnnihilated);
}

TEST(Filters, PurityPreservedOnPureStates) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto psi = random_pure_state({2, 2, 2}, seed);
        const auto out = apply_filter(psi, random_matrix(2, seed + 500), seed % 3);
        EXPECT_NEAR(purity(density_from_pure(out)), 1.0, 1e-9);
    }
}

TEST(Filters, LocalUnitariesKeepMarginalEntropies) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto psi = random_pure_state({2, 2, 2}, seed);
        const auto u = random_unitary(2, seed + 900);
        const auto rho_before = density_from_pure(psi);
        const auto rho_after = density_from_pure(apply_filter(psi, u, seed % 3));
        for (std::size_t k = 0; k < 3; ++k) {
            const SubsystemSet drop = SubsystemSet{k}.complement(3);
            EXPECT_NEAR(von_neumann_entropy(partial_trace(rho_before, drop)),
                        von_neumann_entropy(partial_trace(rho_after, drop)), 1e-9);
            EXPECT_NEAR(von_neumann_entropy(partial_trace(rho_before, SubsystemSet{k})),
                        von_neumann_entropy(partial_trace(rho_after, SubsystemSet{k})), 1e-9);
        }
    }
}
