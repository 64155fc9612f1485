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

#include "qcorr/entropy.hpp"

#include <cmath>
#include <string>

#include "qcorr/error.hpp"

namespace qcorr {

Bits shannon_entropy(std::span<const double> spectrum) {
    Bits h = 0.0;
    for (double p : spectrum) {
        if (p < kEigenClamp) {
            throw Error(ErrorCode::NotPSD,
                        "eigenvalue " + std::to_string(p) + " below -1e-10");
        }
        if (p > 0.0) {
            h -= p * std::log2(p);
        }
    }
    return h;
}

Bits von_neumann_entropy(const DensityMatrix &rho) {
    const auto spectrum = eigvals_hermitian(rho.matrix());
    return shannon_entropy(spectrum);
}

Bits binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw Error(ErrorCode::OutOfRange,
                    "binary entropy argument " + std::to_string(x) +
                        " outside [0, 1]");
    }
    const double pair[2] = {x, 1.0 - x};
    return shannon_entropy(pair);
}

Bits mutual_information(const DensityMatrix &rho, const SubsystemSet &cut) {
    const std::size_t n = rho.subsystem_count();
    if (cut.empty() || cut.size() >= n || cut.indices().back() >= n) {
        throw Error(ErrorCode::BadSubsystemSet,
                    "cut must be a nonempty proper subset of " + std::to_string(n) +
                        " subsystems");
    }
    const auto rest = cut.complement(n);
    const Bits s_cut = von_neumann_entropy(partial_trace(rho, rest));
    const Bits s_rest = von_neumann_entropy(partial_trace(rho, cut));
    return s_cut + s_rest - von_neumann_entropy(rho);
}

} // namespace qcorr
