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

#include <cstddef>
#include <optional>

#include "qcorr/entropy.hpp"
#include "qcorr/measurement.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/**
 * Knobs of the conditional-entropy minimizer: a theta x phi grid over the
 * upper Bloch hemisphere followed by Nelder-Mead refinement.
 */
struct OptimizerConfig {
    int grid_theta = 64;
    int grid_phi = 128;
    int refine_iters = 200;
    double refine_tol = 1e-10;
    /// Grid workers; 0 picks std::thread::hardware_concurrency().
    int threads = 0;
    /// Also sweep three-outcome trine POVMs and record their improvement.
    bool trine_check = false;
    int trine_resolution = 16;

    /// Throws OutOfRange unless every count and tolerance is positive.
    void validate() const;
};

/// The arrow names the measured side: leftward measures the second
/// subsystem of the pair, rightward the first.
enum class Direction { Leftward, Rightward };

struct DirectionalMeasure {
    Bits value = 0.0;
    Direction direction = Direction::Leftward;
    BlochAngles optimal_angles;
    int optimizer_evals = 0;
    /// Projective minimum minus trine minimum, when trine_check is set.
    std::optional<double> trine_improvement;
};

/// Minimum of the measurement-conditional entropy over projective pairs.
struct ConditionalMinimum {
    Bits value = 0.0;
    BlochAngles angles;
    int evals = 0;
};

ConditionalMinimum minimize_conditional_entropy(const DensityMatrix &rho,
                                                std::size_t measured,
                                                const OptimizerConfig &cfg);

/// Grid plus simplex search over trine POVM orientations.
Bits trine_min_conditional_entropy(const DensityMatrix &rho, std::size_t measured,
                                   int resolution);

/// One-way classical correlation S(rho_unmeasured) - min H(unmeasured|measured).
DirectionalMeasure classical_correlation(const DensityMatrix &rho,
                                         std::size_t measured,
                                         const OptimizerConfig &cfg = {});

/// Discord S(rho_measured) - S(rho) + min H; checked against I_q - J.
DirectionalMeasure discord(const DensityMatrix &rho, std::size_t measured,
                           const OptimizerConfig &cfg = {});

/**
 * Brute-force discord: minimum conditional entropy over a uniform
 * resolution x (2 resolution) grid on the full sphere, no refinement.
 * Conditional states come from the Bloch/correlation-tensor form of the
 * state, independent of measure_subsystem.
 */
Bits discord_oracle_grid(const DensityMatrix &rho, std::size_t measured,
                         int resolution);

/// Wootters concurrence of a two-qubit state.
double concurrence(const DensityMatrix &rho);

/// Two-qubit entanglement of formation from the concurrence.
Bits eof_two_qubits(const DensityMatrix &rho);

/// S(rho_a) - E_F(rho_ab) - J(rho_ac, measuring c) for a three-qubit pure
/// state; zero in exact arithmetic.
Bits koashi_winter_residual(const PureState &psi, std::size_t a, std::size_t b,
                            std::size_t c, const OptimizerConfig &cfg = {});

} // namespace qcorr
