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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qcorr {

using Complex = std::complex<double>;

/**
 * Dense square complex matrix stored row-major.
 *
 * Values are immutable once constructed; every constructor rejects
 * non-finite entries with ErrorCode::NonFinite.
 */
class ComplexMatrix {
  public:
    /// dim x dim zero matrix.
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);

    /// Builds entry (r, c) from fn(r, c).
    template <class Fn>
    static ComplexMatrix generate(std::size_t dim, Fn &&fn) {
        std::vector<Complex> entries(dim * dim);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
                entries[r * dim + c] = fn(r, c);
            }
        }
        return ComplexMatrix(dim, std::move(entries));
    }

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] const Complex &operator()(std::size_t r,
                                            std::size_t c) const noexcept {
        return entries_[r * dim_ + c];
    }
    [[nodiscard]] std::span<const Complex> entries() const noexcept {
        return entries_;
    }

    [[nodiscard]] Complex trace() const noexcept;
    /// Largest |a_ij - conj(a_ji)|.
    [[nodiscard]] double hermiticity_defect() const noexcept;
    [[nodiscard]] double off_diagonal_norm() const noexcept;

    friend ComplexMatrix operator+(const ComplexMatrix &a,
                                   const ComplexMatrix &b);
    friend ComplexMatrix operator-(const ComplexMatrix &a,
                                   const ComplexMatrix &b);
    friend ComplexMatrix operator*(const ComplexMatrix &a,
                                   const ComplexMatrix &b);
    friend ComplexMatrix operator*(Complex s, const ComplexMatrix &a);
    friend bool operator==(const ComplexMatrix &a,
                           const ComplexMatrix &b) = default;

  private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

std::vector<Complex> apply(const ComplexMatrix &a, std::span<const Complex> v);

/// Kronecker product; the left factor indexes the most significant digit.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix dagger(const ComplexMatrix &a);
ComplexMatrix conjugate(const ComplexMatrix &a);
/// Rank-one projector-like outer product |u><v|.
ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v);

double frobenius_norm(const ComplexMatrix &a);
double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b);

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kEigenClamp = -1e-10;
inline constexpr double kJacobiOffTol = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

struct EigenDecomposition {
    std::vector<double> eigenvalues; // ascending
    ComplexMatrix eigenvectors;      // columns, matching eigenvalues
};

/**
 * Cyclic complex Jacobi diagonalization of a Hermitian matrix.
 *
 * Eigenvalues come back ascending. Each eigenvector is rephased so its
 * largest-magnitude component is real and positive (first such index on
 * ties), which makes the output a deterministic function of the input.
 */
EigenDecomposition eig_hermitian(const ComplexMatrix &a);

/// Same spectrum as eig_hermitian without accumulating eigenvectors.
std::vector<double> eigvals_hermitian(const ComplexMatrix &a);

/// Hermitian PSD square root. Eigenvalues in [-1e-10, 0) are clamped.
ComplexMatrix psd_sqrt(const ComplexMatrix &a);

} // namespace qcorr
