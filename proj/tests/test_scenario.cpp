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

#include "gtest/gtest.h"
#include "qcorr/error.hpp"
#include "qcorr/scenario.hpp"
#include "test_support.hpp"

using namespace qcorr;
using namespace qcorr::testing;

namespace {

const ScenarioResult &scenario() {
    static const ScenarioResult result = run_scenario();
    return result;
}

} // namespace

TEST(ScenarioConstants, ClosedFormValues) {
    EXPECT_NEAR(ScenarioConstants::s_c0(), 0.600876036, 1e-9);
    EXPECT_NEAR(ScenarioConstants::discord_left(), 0.201752073, 1e-9);
    EXPECT_NEAR(ScenarioConstants::j_left(), 0.399123963, 1e-9);
    const ComplexMatrix rho_c{{0.75, 0.25}, {0.25, 0.25}};
    EXPECT_NEAR(ScenarioConstants::s_c0(), von_neumann_entropy(DensityMatrix(rho_c, {2})), 1e-12);
}

TEST(Ghz3, MarginalsAndPurity) {
    const auto rho = density_from_pure(ghz3());
    EXPECT_EQ(ghz3().dims(), (Dims{2, 2, 2}));
    const double diag[] = {0.5, 0.0, 0.0, 0.5};
    EXPECT_LT(frobenius_distance(partial_trace(rho, SubsystemSet{1}).matrix(),
                                 ComplexMatrix::diagonal(diag)),
              1e-15);
    for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_NEAR(von_neumann_entropy(partial_trace(rho, SubsystemSet{k}.complement(3))), 1.0,
                    1e-12);
    }
    EXPECT_NEAR(purity(rho), 1.0, 1e-12);
}

TEST(FilterE, ColumnsAndNonUnitarity) {
    const auto e = filter_e();
    const double h = 1.0 / std::sqrt(2.0);
    const auto e0 = qcorr::apply(e, std::vector<Complex>{1.0, 0.0});
    const auto e1 = qcorr::apply(e, std::vector<Complex>{0.0, 1.0});
    EXPECT_EQ(e0, (std::vector<Complex>{1.0, 0.0}));
    EXPECT_NEAR(std::abs(e1[0] - h), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(e1[1] - h), 0.0, 1e-15);
    const ComplexMatrix ede{{1.0, h}, {h, 1.0}};
    EXPECT_LT(frobenius_distance(dagger(e) * e, ede), 1e-15);
    EXPECT_GT(frobenius_distance(dagger(e) * e, ComplexMatrix::identity(2)), 0.1);
}

TEST(OperatorMab, ColumnsAndNonUnitarity) {
    const auto m = operator_mab();
    const double h = 1.0 / std::sqrt(2.0);
    const auto on00 = qcorr::apply(m, std::vector<Complex>{1.0, 0.0, 0.0, 0.0});
    const auto on11 = qcorr::apply(m, std::vector<Complex>{0.0, 0.0, 0.0, 1.0});
    EXPECT_EQ(on00, (std::vector<Complex>{1.0, 0.0, 0.0, h}));
    EXPECT_EQ(on11, (std::vector<Complex>{0.0, 0.0, 0.0, h}));
    EXPECT_GT(frobenius_distance(dagger(m) * m, ComplexMatrix::identity(4)), 0.1);
}

TEST(RunScenario, PostStageValues) {
    const auto &post = scenario().post;
    const Bits s0 = ScenarioConstants::s_c0();
    EXPECT_EQ(post.stage, Stage::Post);
    EXPECT_NEAR(post.pairwise_eof[0], s0, 1e-9);
    EXPECT_NEAR(post.pairwise_eof[1], 0.0, 1e-9);
    EXPECT_NEAR(post.pairwise_eof[2], 0.0, 1e-9);
    EXPECT_NEAR(post.pairwise_discord[1][0], 0.2017520, 1e-4);
    EXPECT_NEAR(post.pairwise_discord[1][1], 0.0, 1e-6);
    EXPECT_NEAR(post.marginal_entropies[0], 1.0, 1e-9);
    EXPECT_NEAR(post.marginal_entropies[1], 1.0, 1e-9);
    EXPECT_NEAR(post.marginal_entropies[2], 0.6008760, 1e-7);
    EXPECT_NEAR(post.bipartition_entropies[0], post.marginal_entropies[2], 1e-9);
    EXPECT_NEAR(post.bipartition_entropies[1], 1.0, 1e-9);
    EXPECT_NEAR(post.bipartition_entropies[2], 1.0, 1e-9);
    // J from C's side onto either of A, B equals S(C').
    EXPECT_NEAR(post.pairwise_j[1][1], s0, 1e-4);
    EXPECT_NEAR(post.pairwise_j[2][1], s0, 1e-4);
    EXPECT_NEAR(post.marginal_entropies[0] - post.pairwise_eof[0] - post.pairwise_j[1][0], 0.0,
                2e-3);
    EXPECT_LE(*post.operator_equivalence_distance, 1e-12);
    EXPECT_NEAR(post.purity, 1.0, 1e-9);
    EXPECT_LT(post.bipartition_eof[2], scenario().pre.bipartition_eof[2]);
}

TEST(RunScenario, PreStageTable) {
    const auto &pre = scenario().pre;
    EXPECT_EQ(pre.stage, Stage::Pre);
    EXPECT_FALSE(pre.operator_equivalence_distance.has_value());
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_NEAR(pre.marginal_entropies[i], 1.0, 1e-12);
        EXPECT_NEAR(pre.bipartition_entropies[i], 1.0, 1e-9);
        EXPECT_NEAR(pre.bipartition_eof[i], 1.0, 1e-9);
        EXPECT_NEAR(pre.pairwise_eof[i], 0.0, 1e-9);
        EXPECT_NEAR(pre.pairwise_j[i][0], 1.0, 1e-6);
        EXPECT_NEAR(pre.pairwise_j[i][1], 1.0, 1e-6);
        EXPECT_NEAR(pre.pairwise_discord[i][0], 0.0, 1e-6);
        EXPECT_NEAR(pre.pairwise_discord[i][1], 0.0, 1e-6);
    }
    EXPECT_NEAR(pre.mutual_information_ac, 1.0, 1e-9);
}

TEST(RunScenario, EveryBitsFieldNonnegative) {
    for (const auto *report : {&scenario().pre, &scenario().post}) {
        for (const auto &[name, value] : report->flatten()) {
            EXPECT_GE(value, -1e-9) << name;
        }
        for (double r : report->kw_residuals) {
            EXPECT_GE(r, -1e-6);
            EXPECT_LE(r, 2e-3);
        }
    }
}

TEST(RunScenario, FlattenNamesAreStable) {
    const auto flat = scenario().post.flatten();
    ASSERT_EQ(flat.size(), 36u);
    EXPECT_EQ(flat.front().first, "S_A");
    const auto find = [&](const std::string &name) {
        for (const auto &[key, value] : flat) {
            if (key == name) return value;
        }
        ADD_FAILURE() << "missing " << name;
        return 0.0;
    };
    EXPECT_NEAR(find("discord_AC_measureC"), 0.2017520, 1e-4);
    EXPECT_NEAR(find("J_AC_measureA"), 0.6008760, 1e-4);
    EXPECT_EQ(flat.back().first, "operator_equivalence_distance");
    EXPECT_EQ(scenario().pre.flatten().size(), 35u);
}

TEST(ScenarioChecks, AllPassAtDefaults) {
    const auto checks = scenario_checks(scenario());
    EXPECT_GE(checks.size(), 50u);
    for (const auto &check : checks) {
        EXPECT_TRUE(check.passed()) << check.name << " = " << check.value;
    }
}

TEST(ScenarioChecks, DetectsAPerturbedReport) {
    auto broken = scenario();
    broken.post.pairwise_discord[1][0] += 1e-3;
    const auto checks = scenario_checks(broken);
    const auto failed = std::count_if(checks.begin(), checks.end(),
                                      [](const Check &c) { return !c.passed(); });
    EXPECT_GE(failed, 1);
}
