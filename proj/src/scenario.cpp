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

#include "qcorr/scenario.hpp"

#include <cmath>
#include <string>

#include "qcorr/error.hpp"

namespace qcorr {

namespace {

constexpr int kOracleResolution = 400;

std::string pair_label(std::size_t pair) {
    return std::string(kLabels[kPairs[pair].first]) + kLabels[kPairs[pair].second];
}

Check around(std::string name, double value, double expected, double tol) {
    return {std::move(name), value, expected - tol, expected + tol};
}

} // namespace

Bits ScenarioConstants::s_c0() {
    const double root2 = std::sqrt(2.0);
    return (std::log(8.0) - root2 * std::atanh(1.0 / root2)) / std::log(4.0);
}

std::vector<std::pair<std::string, double>> CorrelationReport::flatten() const {
    std::vector<std::pair<std::string, double>> out;
    for (std::size_t i = 0; i < 3; ++i) {
        out.emplace_back(std::string("S_") + kLabels[i], marginal_entropies[i]);
    }
    for (std::size_t p = 0; p < 3; ++p) {
        out.emplace_back("S_" + pair_label(p), bipartition_entropies[p]);
    }
    static constexpr std::array<const char *, 3> cuts{"EoF_A_BC", "EoF_B_AC", "EoF_C_AB"};
    for (std::size_t i = 0; i < 3; ++i) {
        out.emplace_back(cuts[i], bipartition_eof[i]);
    }
    for (std::size_t p = 0; p < 3; ++p) {
        out.emplace_back("EoF_" + pair_label(p), pairwise_eof[p]);
    }
    for (std::size_t p = 0; p < 3; ++p) {
        out.emplace_back("concurrence_" + pair_label(p), pairwise_concurrence[p]);
    }
    auto directional = [&](const char *prefix, const auto &values) {
        for (std::size_t p = 0; p < 3; ++p) {
            const std::string base = std::string(prefix) + "_" + pair_label(p) + "_measure";
            out.emplace_back(base + kLabels[kPairs[p].second], values[p][0]);
            out.emplace_back(base + kLabels[kPairs[p].first], values[p][1]);
        }
    };
    directional("J", pairwise_j);
    directional("discord", pairwise_discord);
    out.emplace_back("mutual_information_AC", mutual_information_ac);
    for (std::size_t k = 0; k < kPermutations.size(); ++k) {
        std::string name = "KW_";
        for (std::size_t idx : kPermutations[k]) {
            name += kLabels[idx];
        }
        out.emplace_back(std::move(name), kw_residuals[k]);
    }
    out.emplace_back("purity", purity);
    if (operator_equivalence_distance) {
        out.emplace_back("operator_equivalence_distance", *operator_equivalence_distance);
    }
    return out;
}

CorrelationReport correlation_report(const PureState &psi, Stage stage,
                                     const OptimizerConfig &cfg) {
    if (psi.dims() != Dims{2, 2, 2}) {
        throw Error(ErrorCode::DimMismatch, "correlation report needs a three-qubit state");
    }
    const auto rho = density_from_pure(psi);
    CorrelationReport report;
    report.stage = stage;
    for (std::size_t i = 0; i < 3; ++i) {
        report.marginal_entropies[i] =
            von_neumann_entropy(partial_trace(rho, SubsystemSet{i}.complement(3)));
    }
    for (std::size_t p = 0; p < 3; ++p) {
        const auto [first, second] = kPairs[p];
        const std::size_t third = 3 - first - second;
        const auto pair_state = partial_trace(rho, SubsystemSet{third});
        report.bipartition_entropies[p] = von_neumann_entropy(pair_state);
        report.pairwise_eof[p] = eof_two_qubits(pair_state);
        report.pairwise_concurrence[p] = concurrence(pair_state);
        report.pairwise_j[p] = {classical_correlation(pair_state, 1, cfg).value,
                                classical_correlation(pair_state, 0, cfg).value};
        report.pairwise_discord[p] = {discord(pair_state, 1, cfg).value,
                                      discord(pair_state, 0, cfg).value};
        if (first == 0 && second == 2) {
            report.mutual_information_ac = mutual_information(pair_state, SubsystemSet{0});
        }
    }
    // Pure global state: entanglement across a one-versus-two cut is the
    // entropy of the single-qubit side.
    report.bipartition_eof = report.marginal_entropies;
    for (std::size_t k = 0; k < kPermutations.size(); ++k) {
        const auto &perm = kPermutations[k];
        report.kw_residuals[k] = koashi_winter_residual(psi, perm[0], perm[1], perm[2], cfg);
    }
    report.purity = purity(rho);
    return report;
}

PureState ghz3() {
    const double amp = 1.0 / std::sqrt(2.0);
    std::vector<Complex> amps(8, 0.0);
    amps[0b000] = amp;
    amps[0b111] = amp;
    return PureState(std::move(amps), {2, 2, 2});
}

ComplexMatrix filter_e() {
    const double h = 1.0 / std::sqrt(2.0);
    return ComplexMatrix{{1.0, h}, {0.0, h}};
}

ComplexMatrix operator_mab() {
    const double h = 1.0 / std::sqrt(2.0);
    return ComplexMatrix{{1.0, 0.0, 0.0, 0.0},
                         {0.0, 0.0, 0.0, 0.0},
                         {0.0, 0.0, 0.0, 0.0},
                         {h, 0.0, 0.0, h}};
}

ScenarioResult run_scenario(const OptimizerConfig &cfg) {
    cfg.validate();
    const auto initial = ghz3();
    auto filtered = apply_filter(initial, filter_e(), 2);
    const auto via_mab =
        apply_global_operator(initial, kron(operator_mab(), ComplexMatrix::identity(2)));
    const double distance = frobenius_distance(density_from_pure(filtered).matrix(),
                                               density_from_pure(via_mab).matrix());

    auto pre = correlation_report(initial, Stage::Pre, cfg);
    auto post = correlation_report(filtered, Stage::Post, cfg);
    post.operator_equivalence_distance = distance;
    return {initial, std::move(filtered), std::move(pre), std::move(post)};
}

std::vector<Check> scenario_checks(const ScenarioResult &result) {
    const Bits s0 = ScenarioConstants::s_c0();
    const auto &pre = result.pre;
    const auto &post = result.post;
    std::vector<Check> checks;

    checks.push_back(around("S_C_post_closed_form", post.marginal_entropies[2], s0, 1e-12));
    checks.push_back(around("discord_AC_measureC_post", post.pairwise_discord[1][0],
                            ScenarioConstants::discord_left(), 1e-4));
    checks.push_back(around("discord_AC_measureA_post", post.pairwise_discord[1][1], 0.0, 1e-6));

    for (std::size_t p = 0; p < 3; ++p) {
        checks.push_back(around("EoF_" + pair_label(p) + "_pre", pre.pairwise_eof[p], 0.0, 1e-9));
    }
    for (std::size_t p = 0; p < 3; ++p) {
        const auto [first, second] = kPairs[p];
        const std::string base = "J_" + pair_label(p) + "_measure";
        checks.push_back(around(base + kLabels[second] + "_pre", pre.pairwise_j[p][0], 1.0, 1e-4));
        checks.push_back(around(base + kLabels[first] + "_pre", pre.pairwise_j[p][1], 1.0, 1e-4));
    }
    for (std::size_t i = 0; i < 3; ++i) {
        checks.push_back(around(std::string("S_") + kLabels[i] + "_pre",
                                pre.marginal_entropies[i], 1.0, 1e-12));
    }
    for (std::size_t p = 0; p < 3; ++p) {
        checks.push_back(around("S_" + pair_label(p) + "_pre", pre.bipartition_entropies[p],
                                1.0, 1e-9));
        checks.push_back(around(std::string("EoF_") + kLabels[p] + "_rest_pre",
                                pre.bipartition_eof[p], 1.0, 1e-9));
    }

    checks.push_back(around("J_AC_measureC_post", post.pairwise_j[1][0], ScenarioConstants::j_left(), 1e-4));
    checks.push_back(around("J_AC_measureA_post", post.pairwise_j[1][1], s0, 1e-4));
    checks.push_back(around("J_BC_measureB_post", post.pairwise_j[2][1], s0, 1e-4));

    checks.push_back(around("concurrence_AB_post", post.pairwise_concurrence[0],
                            1.0 / std::sqrt(2.0), 1e-9));
    checks.push_back(around("EoF_AB_post", post.pairwise_eof[0], s0, 1e-9));
    checks.push_back(around("EoF_AC_post", post.pairwise_eof[1], 0.0, 1e-9));
    checks.push_back(around("EoF_BC_post", post.pairwise_eof[2], 0.0, 1e-9));
    checks.push_back(around("S_A_post", post.marginal_entropies[0], 1.0, 1e-9));
    checks.push_back(around("S_B_post", post.marginal_entropies[1], 1.0, 1e-9));
    checks.push_back(around("S_AB_minus_S_C_post",
                            post.bipartition_entropies[0] - post.marginal_entropies[2], 0.0, 1e-9));

    checks.push_back(around("mutual_information_AC_pre", pre.mutual_information_ac, 1.0, 1e-9));
    checks.push_back(around("mutual_information_AC_post", post.mutual_information_ac, s0, 1e-9));

    for (const auto *report : {&pre, &post}) {
        const std::string suffix = report->stage == Stage::Pre ? "_pre" : "_post";
        for (std::size_t k = 0; k < kPermutations.size(); ++k) {
            std::string name = "KW_";
            for (std::size_t idx : kPermutations[k]) {
                name += kLabels[idx];
            }
            checks.push_back({name + suffix, report->kw_residuals[k], -1e-6, 2e-3});
        }
        checks.push_back(around("purity" + suffix, report->purity, 1.0, 1e-9));
    }
    checks.push_back({"operator_equivalence_distance",
                      post.operator_equivalence_distance.value_or(1.0), 0.0, 1e-12});

    const auto rho_ac_pre = partial_trace(density_from_pure(result.initial), SubsystemSet{1});
    const auto rho_ac_post = partial_trace(density_from_pure(result.filtered), SubsystemSet{1});
    const int res = kOracleResolution;
    checks.push_back(around("oracle_gap_AC_measureC_post",
                            discord_oracle_grid(rho_ac_post, 1, res) - post.pairwise_discord[1][0],
                            0.0, 1e-4));
    checks.push_back(around("oracle_gap_AC_measureA_post",
                            discord_oracle_grid(rho_ac_post, 0, res) - post.pairwise_discord[1][1],
                            0.0, 1e-4));
    checks.push_back(around("oracle_gap_AC_measureC_pre",
                            discord_oracle_grid(rho_ac_pre, 1, res) - pre.pairwise_discord[1][0],
                            0.0, 1e-4));
    return checks;
}

} // namespace qcorr
