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

#include "qcorr/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qcorr/error.hpp"

namespace qcorr {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::BadSubsystemSet: return "BadSubsystemSet";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::InvalidPovm: return "InvalidPovm";
    case ErrorCode::StateAnnihilated: return "StateAnnihilated";
    case ErrorCode::BadPermutation: return "BadPermutation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

namespace {

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimMismatch,
                    "matrix dimensions " + std::to_string(a.dim()) + " and " +
                        std::to_string(b.dim()) + " differ");
    }
}

bool finite(const Complex &z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim) {
    if (dim == 0) {
        throw Error(ErrorCode::DimMismatch, "matrix dimension must be >= 1");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim == 0 || entries_.size() != dim * dim) {
        throw Error(ErrorCode::DimMismatch,
                    "expected " + std::to_string(dim * dim) +
                        " entries for a square matrix of dimension " +
                        std::to_string(dim));
    }
    if (!std::all_of(entries_.begin(), entries_.end(), finite)) {
        throw Error(ErrorCode::NonFinite, "matrix has a NaN or infinite entry");
    }
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
    entries_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw Error(ErrorCode::DimMismatch, "matrix rows must be square");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    if (dim_ == 0) {
        throw Error(ErrorCode::DimMismatch, "matrix dimension must be >= 1");
    }
    if (!std::all_of(entries_.begin(), entries_.end(), finite)) {
        throw Error(ErrorCode::NonFinite, "matrix has a NaN or infinite entry");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    return generate(dim, [](std::size_t r, std::size_t c) {
        return Complex(r == c ? 1.0 : 0.0);
    });
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    return generate(values.size(), [&](std::size_t r, std::size_t c) {
        return Complex(r == c ? values[r] : 0.0);
    });
}

Complex ComplexMatrix::trace() const noexcept {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::hermiticity_defect() const noexcept {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r; c < dim_; ++c) {
            worst = std::max(worst,
                             std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return worst;
}

double ComplexMatrix::off_diagonal_norm() const noexcept {
    double sum = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            if (r != c) {
                sum += std::norm((*this)(r, c));
            }
        }
    }
    return std::sqrt(sum);
}

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b);
    std::vector<Complex> out(a.entries_);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += b.entries_[i];
    }
    return ComplexMatrix(a.dim_, std::move(out));
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b);
    std::vector<Complex> out(a.entries_);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] -= b.entries_[i];
    }
    return ComplexMatrix(a.dim_, std::move(out));
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b);
    const std::size_t n = a.dim_;
    std::vector<Complex> out(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex ark = a.entries_[r * n + k];
            if (ark == 0.0) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                out[r * n + c] += ark * b.entries_[k * n + c];
            }
        }
    }
    return ComplexMatrix(n, std::move(out));
}

ComplexMatrix operator*(Complex s, const ComplexMatrix &a) {
    std::vector<Complex> out(a.entries_);
    for (auto &z : out) {
        z *= s;
    }
    return ComplexMatrix(a.dim_, std::move(out));
}

std::vector<Complex> apply(const ComplexMatrix &a, std::span<const Complex> v) {
    if (v.size() != a.dim()) {
        throw Error(ErrorCode::DimMismatch, "vector length " +
                                                std::to_string(v.size()) +
                                                " does not match operator");
    }
    std::vector<Complex> out(v.size());
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            out[r] += a(r, c) * v[c];
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t nb = b.dim();
    return ComplexMatrix::generate(a.dim() * nb, [&](std::size_t r, std::size_t c) {
        return a(r / nb, c / nb) * b(r % nb, c % nb);
    });
}

ComplexMatrix dagger(const ComplexMatrix &a) {
    return ComplexMatrix::generate(a.dim(), [&](std::size_t r, std::size_t c) {
        return std::conj(a(c, r));
    });
}

ComplexMatrix conjugate(const ComplexMatrix &a) {
    return ComplexMatrix::generate(a.dim(), [&](std::size_t r, std::size_t c) {
        return std::conj(a(r, c));
    });
}

ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v) {
    if (u.size() != v.size()) {
        throw Error(ErrorCode::DimMismatch, "outer product of unequal lengths");
    }
    return ComplexMatrix::generate(u.size(), [&](std::size_t r, std::size_t c) {
        return u[r] * std::conj(v[c]);
    });
}

double frobenius_norm(const ComplexMatrix &a) {
    double sum = 0.0;
    for (const auto &z : a.entries()) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        sum += std::norm(a.entries()[i] - b.entries()[i]);
    }
    return std::sqrt(sum);
}

namespace {

// Working storage for the Jacobi sweeps.
struct JacobiResult {
    std::vector<double> values;
    std::vector<Complex> vectors; // row-major, columns are eigenvectors
};

JacobiResult jacobi(const ComplexMatrix &input, bool want_vectors) {
    if (input.hermiticity_defect() > kHermitianTol) {
        throw Error(ErrorCode::NotHermitian,
                    "max |a - a^dagger| entry is " +
                        std::to_string(input.hermiticity_defect()));
    }
    const std::size_t n = input.dim();
    std::vector<Complex> a(input.entries().begin(), input.entries().end());
    // Symmetrize so the rotations act on an exactly Hermitian matrix.
    for (std::size_t r = 0; r < n; ++r) {
        a[r * n + r] = a[r * n + r].real();
        for (std::size_t c = r + 1; c < n; ++c) {
            const Complex avg = 0.5 * (a[r * n + c] + std::conj(a[c * n + r]));
            a[r * n + c] = avg;
            a[c * n + r] = std::conj(avg);
        }
    }
    std::vector<Complex> v;
    if (want_vectors) {
        v.assign(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            v[i * n + i] = 1.0;
        }
    }

    auto off_norm = [&] {
        double sum = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = r + 1; c < n; ++c) {
                sum += 2.0 * std::norm(a[r * n + c]);
            }
        }
        return std::sqrt(sum);
    };

    int sweep = 0;
    for (; sweep < kJacobiMaxSweeps && off_norm() >= kJacobiOffTol; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a[p * n + q];
                const double mag = std::abs(apq);
                if (mag == 0.0) {
                    continue;
                }
                // G = diag-phase * real rotation; G^dagger A G zeroes (p, q).
                const Complex phase = apq / mag; // e^{i phi}
                const double app = a[p * n + p].real();
                const double aqq = a[q * n + q].real();
                const double theta = 0.5 * (aqq - app) / mag;
                double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                if (theta < 0.0) {
                    t = -t;
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex gqp = -s * std::conj(phase);
                const Complex gqq = c * std::conj(phase);

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a[k * n + p];
                    const Complex akq = a[k * n + q];
                    a[k * n + p] = akp * c + akq * gqp;
                    a[k * n + q] = akp * s + akq * gqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a[p * n + k];
                    const Complex aqk = a[q * n + k];
                    a[p * n + k] = c * apk + std::conj(gqp) * aqk;
                    a[q * n + k] = s * apk + std::conj(gqq) * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                a[p * n + p] = a[p * n + p].real();
                a[q * n + q] = a[q * n + q].real();

                if (want_vectors) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const Complex vkp = v[k * n + p];
                        const Complex vkq = v[k * n + q];
                        v[k * n + p] = vkp * c + vkq * gqp;
                        v[k * n + q] = vkp * s + vkq * gqq;
                    }
                }
            }
        }
    }
    if (off_norm() >= kJacobiOffTol) {
        throw Error(ErrorCode::NoConvergence,
                    "off-diagonal norm still " + std::to_string(off_norm()) +
                        " after " + std::to_string(sweep) + " sweeps");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a[i * n + i].real() < a[j * n + j].real();
    });

    JacobiResult out;
    out.values.reserve(n);
    for (std::size_t i : order) {
        out.values.push_back(a[i * n + i].real());
    }
    if (want_vectors) {
        out.vectors.assign(n * n, 0.0);
        for (std::size_t col = 0; col < n; ++col) {
            const std::size_t src = order[col];
            std::size_t lead = 0;
            for (std::size_t k = 1; k < n; ++k) {
                if (std::abs(v[k * n + src]) > std::abs(v[lead * n + src]) + 1e-14) {
                    lead = k;
                }
            }
            const Complex fix = std::conj(v[lead * n + src]) / std::abs(v[lead * n + src]);
            for (std::size_t k = 0; k < n; ++k) {
                out.vectors[k * n + col] = v[k * n + src] * fix;
            }
            out.vectors[lead * n + col] = std::abs(out.vectors[lead * n + col]);
        }
    }
    return out;
}

} // namespace

EigenDecomposition eig_hermitian(const ComplexMatrix &a) {
    auto result = jacobi(a, true);
    return {std::move(result.values),
            ComplexMatrix(a.dim(), std::move(result.vectors))};
}

std::vector<double> eigvals_hermitian(const ComplexMatrix &a) {
    return jacobi(a, false).values;
}

ComplexMatrix psd_sqrt(const ComplexMatrix &a) {
    const auto eig = eig_hermitian(a);
    std::vector<double> roots;
    roots.reserve(eig.eigenvalues.size());
    for (double lambda : eig.eigenvalues) {
        if (lambda < kEigenClamp) {
            throw Error(ErrorCode::NotPSD,
                        "eigenvalue " + std::to_string(lambda) + " below -1e-10");
        }
        roots.push_back(std::sqrt(std::max(lambda, 0.0)));
    }
    const auto &vecs = eig.eigenvectors;
    const std::size_t n = a.dim();
    return ComplexMatrix::generate(n, [&](std::size_t r, std::size_t c) {
        Complex sum = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            sum += vecs(r, k) * roots[k] * std::conj(vecs(c, k));
        }
        return sum;
    });
}

} // namespace qcorr
