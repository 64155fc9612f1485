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
#include <vector>

#include "qcorr/entropy.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// Point on the Bloch sphere, theta in [0, pi], phi in [0, 2 pi).
struct BlochAngles {
    double theta = 0.0;
    double phi = 0.0;

    /// Canonical angles of the direction (sin t cos p, sin t sin p, cos t)
    /// for arbitrary real t, p.
    static BlochAngles canonical(double theta, double phi);
};

/// Ordered effects on one subsystem: Hermitian, PSD, summing to identity.
class Povm {
  public:
    /// Throws InvalidPovm when any invariant fails.
    explicit Povm(std::vector<ComplexMatrix> effects);

    [[nodiscard]] const std::vector<ComplexMatrix> &effects() const noexcept {
        return effects_;
    }
    [[nodiscard]] std::size_t dim() const noexcept {
        return effects_.front().dim();
    }
    [[nodiscard]] std::size_t size() const noexcept { return effects_.size(); }

  private:
    struct Trusted {};
    Povm(Trusted, std::vector<ComplexMatrix> effects);

    friend Povm projective_pair(const BlochAngles &angles);
    friend Povm trine_povm(double alpha, double beta, double gamma);

    std::vector<ComplexMatrix> effects_;
};

inline constexpr double kZeroProbability = 1e-12;

struct MeasurementOutcome {
    double probability = 0.0;
    /// Empty when probability < kZeroProbability.
    std::optional<DensityMatrix> conditional_state;

    [[nodiscard]] bool zero_probability() const noexcept {
        return !conditional_state.has_value();
    }
};

/// {(I + n.sigma)/2, (I - n.sigma)/2} along the Bloch direction of `angles`.
/// Throws OutOfRange for angles outside their canonical ranges.
Povm projective_pair(const BlochAngles &angles);

/**
 * Three-outcome symmetric qubit POVM with effects (I + n_k.sigma)/3, the n_k
 * coplanar at 120 degrees. The plane is the xy-plane rotated by the z-y-z
 * Euler angles (alpha, beta, gamma).
 */
Povm trine_povm(double alpha, double beta, double gamma);

/// One outcome per effect, conditional states on the unmeasured subsystems.
std::vector<MeasurementOutcome> measure_subsystem(const DensityMatrix &rho,
                                                  const Povm &povm,
                                                  std::size_t target);

/// sum_i p_i S(rho_{rest|i}) over outcomes with p_i >= 1e-12.
Bits conditional_entropy(const DensityMatrix &rho, const Povm &povm,
                         std::size_t measured);

/// K applied to `target` and renormalized; throws StateAnnihilated when the
/// post-filter norm (pure) or trace (mixed) falls below 1e-12.
PureState apply_filter(const PureState &psi, const ComplexMatrix &k,
                       std::size_t target);
DensityMatrix apply_filter(const DensityMatrix &rho, const ComplexMatrix &k,
                           std::size_t target);

/// As apply_filter with K acting on the full Hilbert space.
PureState apply_global_operator(const PureState &psi, const ComplexMatrix &k);
DensityMatrix apply_global_operator(const DensityMatrix &rho,
                                    const ComplexMatrix &k);

/// Pauli matrices.
const ComplexMatrix &pauli_x();
const ComplexMatrix &pauli_y();
const ComplexMatrix &pauli_z();

} // namespace qcorr
