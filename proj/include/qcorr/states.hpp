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
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "qcorr/numerics.hpp"

namespace qcorr {

using Dims = std::vector<std::size_t>;

/// Total Hilbert dimension of a tensor-factor list.
std::size_t total_dim(std::span<const std::size_t> dims);

/// Sorted, duplicate-free set of subsystem positions (0-based).
class SubsystemSet {
  public:
    SubsystemSet() = default;
    SubsystemSet(std::initializer_list<std::size_t> indices);
    explicit SubsystemSet(std::vector<std::size_t> indices);

    [[nodiscard]] const std::vector<std::size_t> &indices() const noexcept {
        return indices_;
    }
    [[nodiscard]] bool contains(std::size_t i) const noexcept;
    [[nodiscard]] std::size_t size() const noexcept { return indices_.size(); }
    [[nodiscard]] bool empty() const noexcept { return indices_.empty(); }
    /// Positions in [0, n) not in this set.
    [[nodiscard]] SubsystemSet complement(std::size_t n) const;

    friend bool operator==(const SubsystemSet &, const SubsystemSet &) = default;

  private:
    std::vector<std::size_t> indices_;
};

/**
 * Validated quantum state: Hermitian within 1e-10, unit trace within 1e-10,
 * no eigenvalue below -1e-10. Subsystem 0 is the most significant tensor
 * index.
 */
class DensityMatrix {
  public:
    /// Throws InvalidState (or DimMismatch) when an invariant fails.
    DensityMatrix(ComplexMatrix mat, Dims dims);

    /// Skips the spectral check; for results that are valid by
    /// construction (partial traces, normalized conditional states).
    static DensityMatrix from_trusted(ComplexMatrix mat, Dims dims);

    /// Checks the invariants without constructing; throws on failure.
    static void validate(const ComplexMatrix &mat, const Dims &dims);

    [[nodiscard]] const ComplexMatrix &matrix() const noexcept { return mat_; }
    [[nodiscard]] const Dims &dims() const noexcept { return dims_; }
    [[nodiscard]] std::size_t dim() const noexcept { return mat_.dim(); }
    [[nodiscard]] std::size_t subsystem_count() const noexcept {
        return dims_.size();
    }

  private:
    struct Trusted {};
    DensityMatrix(Trusted, ComplexMatrix mat, Dims dims);

    ComplexMatrix mat_;
    Dims dims_;
};

/// Unit-norm amplitude vector over labeled tensor factors.
class PureState {
  public:
    PureState(std::vector<Complex> amplitudes, Dims dims);

    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }
    [[nodiscard]] const Dims &dims() const noexcept { return dims_; }

  private:
    std::vector<Complex> amplitudes_;
    Dims dims_;
};

DensityMatrix density_from_pure(const PureState &psi);

/// Traces out `discard`; retained factors keep their relative order.
DensityMatrix partial_trace(const DensityMatrix &rho, const SubsystemSet &discard);

/// Tr[rho^2].
double purity(const DensityMatrix &rho);

/// Identity on every factor except `target`, where `op` acts.
ComplexMatrix embed_local(const ComplexMatrix &op, std::size_t target,
                          std::span<const std::size_t> dims);

/// Gaussian real and imaginary parts, normalized. Same seed, same state.
PureState random_pure_state(const Dims &dims, std::uint64_t seed);

/// Row-major strides for a factor list (subsystem 0 has the largest).
std::vector<std::size_t> strides(std::span<const std::size_t> dims);

} // namespace qcorr
