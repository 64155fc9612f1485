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

#include "qcorr/measurement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "qcorr/error.hpp"

namespace qcorr {

namespace {

constexpr double kPovmTol = 1e-10;
constexpr double kAnnihilated = 1e-12;

ComplexMatrix bloch_operator(double scale, const std::array<double, 3> &n) {
    // scale * (I + n.sigma)
    const Complex i(0.0, 1.0);
    return ComplexMatrix{{scale * (1.0 + n[2]), scale * (n[0] - i * n[1])},
                         {scale * (n[0] + i * n[1]), scale * (1.0 - n[2])}};
}

void require_complete(const std::vector<ComplexMatrix> &effects) {
    if (effects.empty()) {
        throw Error(ErrorCode::InvalidPovm, "POVM has no effects");
    }
    const std::size_t d = effects.front().dim();
    ComplexMatrix sum(d);
    for (const auto &e : effects) {
        if (e.dim() != d) {
            throw Error(ErrorCode::InvalidPovm, "POVM effects differ in dimension");
        }
        sum = sum + e;
    }
    const double gap = frobenius_distance(sum, ComplexMatrix::identity(d));
    if (gap > kPovmTol) {
        throw Error(ErrorCode::InvalidPovm,
                    "effects sum to identity only within " + std::to_string(gap));
    }
}

} // namespace

BlochAngles BlochAngles::canonical(double theta, double phi) {
    const double x = std::sin(theta) * std::cos(phi);
    const double y = std::sin(theta) * std::sin(phi);
    const double z = std::clamp(std::cos(theta), -1.0, 1.0);
    BlochAngles out;
    out.theta = std::acos(z);
    out.phi = std::atan2(y, x);
    if (out.phi < 0.0) {
        out.phi += 2.0 * std::numbers::pi;
    }
    if (out.phi >= 2.0 * std::numbers::pi) {
        out.phi = 0.0;
    }
    return out;
}

Povm::Povm(std::vector<ComplexMatrix> effects) : effects_(std::move(effects)) {
    require_complete(effects_);
    for (std::size_t k = 0; k < effects_.size(); ++k) {
        const auto &e = effects_[k];
        if (e.hermiticity_defect() > kPovmTol) {
            throw Error(ErrorCode::InvalidPovm,
                        "effect " + std::to_string(k) + " is not Hermitian");
        }
        if (eigvals_hermitian(e).front() < kEigenClamp) {
            throw Error(ErrorCode::InvalidPovm,
                        "effect " + std::to_string(k) + " is not positive");
        }
    }
}

Povm::Povm(Trusted, std::vector<ComplexMatrix> effects)
    : effects_(std::move(effects)) {
    require_complete(effects_);
}

Povm projective_pair(const BlochAngles &angles) {
    if (!(angles.theta >= 0.0 && angles.theta <= std::numbers::pi &&
          angles.phi >= 0.0 && angles.phi < 2.0 * std::numbers::pi)) {
        throw Error(ErrorCode::OutOfRange, "Bloch angles outside [0, pi] x [0, 2 pi)");
    }
    const double st = std::sin(angles.theta);
    const std::array<double, 3> n{st * std::cos(angles.phi), st * std::sin(angles.phi),
                                  std::cos(angles.theta)};
    const std::array<double, 3> m{-n[0], -n[1], -n[2]};
    return Povm(Povm::Trusted{}, {bloch_operator(0.5, n), bloch_operator(0.5, m)});
}

Povm trine_povm(double alpha, double beta, double gamma) {
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    const double cb = std::cos(beta), sb = std::sin(beta);
    std::vector<ComplexMatrix> effects;
    for (int k = 0; k < 3; ++k) {
        const double psi = gamma + 2.0 * std::numbers::pi * k / 3.0;
        // Rz(alpha) Ry(beta) (cos psi, sin psi, 0)
        const double x0 = cb * std::cos(psi);
        const double y0 = std::sin(psi);
        const double z0 = -sb * std::cos(psi);
        effects.push_back(bloch_operator(1.0 / 3.0, {ca * x0 - sa * y0, sa * x0 + ca * y0, z0}));
    }
    return Povm(Povm::Trusted{}, std::move(effects));
}

std::vector<MeasurementOutcome> measure_subsystem(const DensityMatrix &rho,
                                                  const Povm &povm,
                                                  std::size_t target) {
    const Dims &dims = rho.dims();
    if (dims.size() < 2 || target >= dims.size() || povm.dim() != dims[target]) {
        throw Error(ErrorCode::DimMismatch,
                    "POVM of dimension " + std::to_string(povm.dim()) +
                        " cannot measure subsystem " + std::to_string(target));
    }
    const auto stride = strides(dims);
    Dims rest_dims;
    std::vector<std::size_t> rest_off{0};
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (k == target) {
            continue;
        }
        rest_dims.push_back(dims[k]);
        std::vector<std::size_t> next;
        for (std::size_t base : rest_off) {
            for (std::size_t d = 0; d < dims[k]; ++d) {
                next.push_back(base + d * stride[k]);
            }
        }
        rest_off = std::move(next);
    }
    const std::size_t td = dims[target];
    const std::size_t ts = stride[target];
    const auto &m = rho.matrix();

    std::vector<MeasurementOutcome> outcomes;
    outcomes.reserve(povm.size());
    for (const auto &effect : povm.effects()) {
        // Tr_target[(Pi (x) I) rho]: out(r, c) = sum_{t,u} Pi(t, u) rho((r,u), (c,t))
        const std::size_t n = rest_off.size();
        std::vector<Complex> out(n * n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                Complex sum = 0.0;
                for (std::size_t t = 0; t < td; ++t) {
                    for (std::size_t u = 0; u < td; ++u) {
                        sum += effect(t, u) * m(rest_off[r] + u * ts, rest_off[c] + t * ts);
                    }
                }
                out[r * n + c] = sum;
            }
        }
        double p = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            p += out[i * n + i].real();
        }
        MeasurementOutcome outcome;
        outcome.probability = std::max(p, 0.0);
        if (p >= kZeroProbability) {
            for (std::size_t r = 0; r < n; ++r) {
                out[r * n + r] = out[r * n + r].real() / p;
                for (std::size_t c = r + 1; c < n; ++c) {
                    const Complex avg = 0.5 * (out[r * n + c] + std::conj(out[c * n + r])) / p;
                    out[r * n + c] = avg;
                    out[c * n + r] = std::conj(avg);
                }
            }
            outcome.conditional_state =
                DensityMatrix::from_trusted(ComplexMatrix(n, std::move(out)), rest_dims);
        }
        outcomes.push_back(std::move(outcome));
    }
    return outcomes;
}

Bits conditional_entropy(const DensityMatrix &rho, const Povm &povm,
                         std::size_t measured) {
    Bits h = 0.0;
    for (const auto &outcome : measure_subsystem(rho, povm, measured)) {
        if (!outcome.zero_probability()) {
            h += outcome.probability * von_neumann_entropy(*outcome.conditional_state);
        }
    }
    return h;
}

PureState apply_global_operator(const PureState &psi, const ComplexMatrix &k) {
    if (k.dim() != psi.amplitudes().size()) {
        throw Error(ErrorCode::DimMismatch, "operator does not match state dimension");
    }
    auto out = apply(k, psi.amplitudes());
    double norm2 = 0.0;
    for (const auto &z : out) {
        norm2 += std::norm(z);
    }
    const double norm = std::sqrt(norm2);
    if (norm < kAnnihilated) {
        throw Error(ErrorCode::StateAnnihilated,
                    "post-filter norm " + std::to_string(norm) + " below 1e-12");
    }
    for (auto &z : out) {
        z /= norm;
    }
    return PureState(std::move(out), psi.dims());
}

DensityMatrix apply_global_operator(const DensityMatrix &rho, const ComplexMatrix &k) {
    if (k.dim() != rho.dim()) {
        throw Error(ErrorCode::DimMismatch, "operator does not match state dimension");
    }
    const auto raw = k * rho.matrix() * dagger(k);
    const double tr = raw.trace().real();
    if (tr < kAnnihilated) {
        throw Error(ErrorCode::StateAnnihilated,
                    "post-filter trace " + std::to_string(tr) + " below 1e-12");
    }
    return DensityMatrix(Complex(1.0 / tr) * raw, rho.dims());
}

PureState apply_filter(const PureState &psi, const ComplexMatrix &k,
                       std::size_t target) {
    return apply_global_operator(psi, embed_local(k, target, psi.dims()));
}

DensityMatrix apply_filter(const DensityMatrix &rho, const ComplexMatrix &k,
                           std::size_t target) {
    return apply_global_operator(rho, embed_local(k, target, rho.dims()));
}

const ComplexMatrix &pauli_x() {
    static const ComplexMatrix m{{0.0, 1.0}, {1.0, 0.0}};
    return m;
}

const ComplexMatrix &pauli_y() {
    static const ComplexMatrix m{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}};
    return m;
}

const ComplexMatrix &pauli_z() {
    static const ComplexMatrix m{{1.0, 0.0}, {0.0, -1.0}};
    return m;
}

} // namespace qcorr
