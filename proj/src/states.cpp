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

#include "qcorr/states.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "qcorr/error.hpp"

namespace qcorr {

namespace {

constexpr double kStateTol = 1e-10;

void require_dims(const Dims &dims, std::size_t dim) {
    if (dims.empty() || std::find(dims.begin(), dims.end(), 0u) != dims.end()) {
        throw Error(ErrorCode::DimMismatch, "subsystem dimensions must be >= 1");
    }
    if (total_dim(dims) != dim) {
        throw Error(ErrorCode::DimMismatch,
                    "product of subsystem dimensions " +
                        std::to_string(total_dim(dims)) +
                        " does not match state dimension " + std::to_string(dim));
    }
}

// Offsets into the full index for every multi-index over `which`.
std::vector<std::size_t> offsets(const std::vector<std::size_t> &which,
                                 std::span<const std::size_t> dims,
                                 std::span<const std::size_t> stride) {
    std::vector<std::size_t> out{0};
    for (std::size_t k : which) {
        std::vector<std::size_t> next;
        next.reserve(out.size() * dims[k]);
        for (std::size_t base : out) {
            for (std::size_t d = 0; d < dims[k]; ++d) {
                next.push_back(base + d * stride[k]);
            }
        }
        out = std::move(next);
    }
    return out;
}

} // namespace

std::size_t total_dim(std::span<const std::size_t> dims) {
    std::size_t n = 1;
    for (std::size_t d : dims) {
        n *= d;
    }
    return n;
}

std::vector<std::size_t> strides(std::span<const std::size_t> dims) {
    std::vector<std::size_t> out(dims.size(), 1);
    for (std::size_t k = dims.size(); k-- > 1;) {
        out[k - 1] = out[k] * dims[k];
    }
    return out;
}

SubsystemSet::SubsystemSet(std::initializer_list<std::size_t> indices)
    : SubsystemSet(std::vector<std::size_t>(indices)) {}

SubsystemSet::SubsystemSet(std::vector<std::size_t> indices)
    : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

bool SubsystemSet::contains(std::size_t i) const noexcept {
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

SubsystemSet SubsystemSet::complement(std::size_t n) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (!contains(i)) {
            out.push_back(i);
        }
    }
    return SubsystemSet(std::move(out));
}

void DensityMatrix::validate(const ComplexMatrix &mat, const Dims &dims) {
    require_dims(dims, mat.dim());
    if (mat.hermiticity_defect() > kStateTol) {
        throw Error(ErrorCode::InvalidState, "matrix is not Hermitian");
    }
    const double tr = mat.trace().real();
    if (std::abs(tr - 1.0) > kStateTol) {
        throw Error(ErrorCode::InvalidState,
                    "trace deviates from 1 (trace = " + std::to_string(tr) + ")");
    }
    const auto values = eigvals_hermitian(mat);
    if (values.front() < kEigenClamp) {
        throw Error(ErrorCode::InvalidState,
                    "negative eigenvalue " + std::to_string(values.front()));
    }
}

DensityMatrix::DensityMatrix(ComplexMatrix mat, Dims dims)
    : mat_(std::move(mat)), dims_(std::move(dims)) {
    validate(mat_, dims_);
}

DensityMatrix::DensityMatrix(Trusted, ComplexMatrix mat, Dims dims)
    : mat_(std::move(mat)), dims_(std::move(dims)) {
    require_dims(dims_, mat_.dim());
}

DensityMatrix DensityMatrix::from_trusted(ComplexMatrix mat, Dims dims) {
    return DensityMatrix(Trusted{}, std::move(mat), std::move(dims));
}

PureState::PureState(std::vector<Complex> amplitudes, Dims dims)
    : amplitudes_(std::move(amplitudes)), dims_(std::move(dims)) {
    require_dims(dims_, amplitudes_.size());
    double norm2 = 0.0;
    for (const auto &z : amplitudes_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorCode::NonFinite, "amplitude is NaN or infinite");
        }
        norm2 += std::norm(z);
    }
    if (std::abs(std::sqrt(norm2) - 1.0) > kStateTol) {
        throw Error(ErrorCode::InvalidState,
                    "norm deviates from 1 (norm = " + std::to_string(std::sqrt(norm2)) +
                        ")");
    }
}

DensityMatrix density_from_pure(const PureState &psi) {
    return DensityMatrix::from_trusted(outer(psi.amplitudes(), psi.amplitudes()),
                                       psi.dims());
}

DensityMatrix partial_trace(const DensityMatrix &rho, const SubsystemSet &discard) {
    const Dims &dims = rho.dims();
    const std::size_t n = dims.size();
    if (discard.empty() || discard.size() >= n || discard.indices().back() >= n) {
        throw Error(ErrorCode::BadSubsystemSet,
                    "discard set must be a nonempty proper subset of " +
                        std::to_string(n) + " subsystems");
    }
    const auto keep = discard.complement(n);
    const auto stride = strides(dims);
    const auto keep_off = offsets(keep.indices(), dims, stride);
    const auto drop_off = offsets(discard.indices(), dims, stride);

    Dims out_dims;
    for (std::size_t k : keep.indices()) {
        out_dims.push_back(dims[k]);
    }
    const auto &m = rho.matrix();
    auto out = ComplexMatrix::generate(keep_off.size(), [&](std::size_t r, std::size_t c) {
        Complex sum = 0.0;
        for (std::size_t t : drop_off) {
            sum += m(keep_off[r] + t, keep_off[c] + t);
        }
        return sum;
    });
    return DensityMatrix::from_trusted(std::move(out), std::move(out_dims));
}

double purity(const DensityMatrix &rho) {
    // Tr[rho^2] = sum |rho_ij|^2 for Hermitian rho.
    double sum = 0.0;
    for (const auto &z : rho.matrix().entries()) {
        sum += std::norm(z);
    }
    return sum;
}

ComplexMatrix embed_local(const ComplexMatrix &op, std::size_t target,
                          std::span<const std::size_t> dims) {
    if (target >= dims.size() || op.dim() != dims[target]) {
        throw Error(ErrorCode::DimMismatch,
                    "operator of dimension " + std::to_string(op.dim()) +
                        " cannot act on subsystem " + std::to_string(target));
    }
    ComplexMatrix out = target == 0 ? op : ComplexMatrix::identity(dims[0]);
    for (std::size_t k = 1; k < dims.size(); ++k) {
        out = kron(out, k == target ? op : ComplexMatrix::identity(dims[k]));
    }
    return out;
}

PureState random_pure_state(const Dims &dims, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> amps(total_dim(dims));
    double norm2 = 0.0;
    for (auto &z : amps) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        z = Complex(re, im);
        norm2 += re * re + im * im;
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto &z : amps) {
        z *= scale;
    }
    return PureState(std::move(amps), dims);
}

} // namespace qcorr
