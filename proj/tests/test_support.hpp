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

// Test-only helpers: seeded random operators and index-loop oracles that
// deliberately avoid the library's own kron / partial_trace code paths.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qcorr/numerics.hpp"
#include "qcorr/states.hpp"

namespace qcorr::testing {

inline ComplexMatrix random_matrix(std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    return ComplexMatrix::generate(dim, [&](std::size_t, std::size_t) {
        const double re = g(rng);
        return Complex(re, g(rng));
    });
}

inline ComplexMatrix random_hermitian(std::size_t dim, std::uint64_t seed) {
    const auto a = random_matrix(dim, seed);
    return Complex(0.5) * (a + dagger(a));
}

inline ComplexMatrix random_psd(std::size_t dim, std::uint64_t seed) {
    const auto b = random_matrix(dim, seed);
    return dagger(b) * b;
}

/// exp(iH) for a random Hermitian H.
inline ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed) {
    const auto eig = eig_hermitian(random_hermitian(dim, seed));
    const auto &v = eig.eigenvectors;
    return ComplexMatrix::generate(dim, [&](std::size_t r, std::size_t c) {
        Complex sum = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            sum += v(r, k) * std::exp(Complex(0.0, eig.eigenvalues[k])) * std::conj(v(c, k));
        }
        return sum;
    });
}

/// Random mixed two-qubit state: the [2, 2] marginal of a random pure
/// state on [2, 2, 4], full rank with probability one.
inline DensityMatrix random_two_qubit_state(std::uint64_t seed) {
    const auto psi = random_pure_state({2, 2, 4}, seed);
    return partial_trace(density_from_pure(psi), SubsystemSet{2});
}

/// kron by explicit (i, j, k, l) loops.
inline ComplexMatrix kron_oracle(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t na = a.dim(), nb = b.dim();
    std::vector<Complex> out(na * nb * na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    out[(i * nb + k) * (na * nb) + (j * nb + l)] = a(i, j) * b(k, l);
    return ComplexMatrix(na * nb, std::move(out));
}

/// Three-qubit partial trace over one qubit by explicit bit loops.
inline ComplexMatrix trace_one_qubit_oracle(const ComplexMatrix &rho8, int drop) {
    std::vector<Complex> out(16);
    auto compose = [&](int kept_hi, int kept_lo, int t) {
        int bits[3];
        int kept[2] = {kept_hi, kept_lo};
        int next = 0;
        for (int q = 0; q < 3; ++q) {
            bits[q] = q == drop ? t : kept[next++];
        }
        return bits[0] * 4 + bits[1] * 2 + bits[2];
    };
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            for (int t = 0; t < 2; ++t)
                out[r * 4 + c] += rho8(compose(r >> 1, r & 1, t), compose(c >> 1, c & 1, t));
    return ComplexMatrix(4, std::move(out));
}

inline double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

} // namespace qcorr::testing
