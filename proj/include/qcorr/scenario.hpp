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

#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcorr/correlations.hpp"

namespace qcorr {

/// Closed-form values of the GHZ filter demonstration, in bits.
struct ScenarioConstants {
    /// (ln 8 - sqrt2 arccoth sqrt2) / ln 4, the entropy of the filtered qubit.
    static Bits s_c0();
    static Bits discord_left() { return 2.0 * s_c0() - 1.0; }
    static Bits j_left() { return 1.0 - s_c0(); }
};

enum class Stage { Pre, Post };

/// Subsystem labels A = 0, B = 1, C = 2 in tensor order.
inline constexpr std::array<const char *, 3> kLabels{"A", "B", "C"};
/// Pairs in report order: AB, AC, BC.
inline constexpr std::array<std::pair<std::size_t, std::size_t>, 3> kPairs{
    {{0, 1}, {0, 2}, {1, 2}}};
/// (a, b, c) permutations in lexicographic order.
inline constexpr std::array<std::array<std::size_t, 3>, 6> kPermutations{
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

/**
 * Correlation table of a pure three-qubit state.
 *
 * Per-pair arrays follow kPairs. Directional entries hold
 * [0] = measuring the second member of the pair (leftward) and
 * [1] = measuring the first (rightward).
 */
struct CorrelationReport {
    Stage stage = Stage::Pre;
    std::array<Bits, 3> marginal_entropies{};    // S(A), S(B), S(C)
    std::array<Bits, 3> bipartition_entropies{}; // S(AB), S(AC), S(BC)
    std::array<Bits, 3> bipartition_eof{};       // A|BC, B|AC, C|AB
    std::array<Bits, 3> pairwise_eof{};
    std::array<double, 3> pairwise_concurrence{};
    std::array<std::array<Bits, 2>, 3> pairwise_j{};
    std::array<std::array<Bits, 2>, 3> pairwise_discord{};
    Bits mutual_information_ac = 0.0;
    std::array<Bits, 6> kw_residuals{}; // follows kPermutations
    double purity = 0.0;
    /// Distance between the E-filtered and M_AB-transformed global states.
    std::optional<double> operator_equivalence_distance;

    /// Named measures in a fixed order, e.g. "discord_AC_measureC".
    [[nodiscard]] std::vector<std::pair<std::string, double>> flatten() const;
};

CorrelationReport correlation_report(const PureState &psi, Stage stage,
                                     const OptimizerConfig &cfg = {});

/// (|000> + |111>) / sqrt2 on dims [2, 2, 2].
PureState ghz3();
/// [[1, 1/sqrt2], [0, 1/sqrt2]], acting on C.
ComplexMatrix filter_e();
/// The 4x4 operator on AB that reproduces filter_e on the GHZ state.
ComplexMatrix operator_mab();

struct ScenarioResult {
    PureState initial;
    PureState filtered;
    CorrelationReport pre;
    CorrelationReport post;
};

ScenarioResult run_scenario(const OptimizerConfig &cfg = {});

/// Closed-interval check on one reported quantity.
struct Check {
    std::string name;
    double value = 0.0;
    double lower = 0.0;
    double upper = 0.0;

    [[nodiscard]] bool passed() const noexcept {
        return value >= lower && value <= upper;
    }
};

/// Every reproducible claim about the scenario with its pinned tolerance.
std::vector<Check> scenario_checks(const ScenarioResult &result);

} // namespace qcorr
