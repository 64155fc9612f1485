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

#include <span>

#include "qcorr/states.hpp"

namespace qcorr {

/// Entropic quantities, always in bits (log base 2).
using Bits = double;

/// -sum p log2 p over a spectrum, with 0 log 0 = 0. Values in
/// [-1e-10, 0) are clamped; anything lower throws NotPSD.
Bits shannon_entropy(std::span<const double> spectrum);

Bits von_neumann_entropy(const DensityMatrix &rho);

/// Throws OutOfRange outside [0, 1].
Bits binary_entropy(double x);

/// S(rho_cut) + S(rho_rest) - S(rho). `cut` must be a nonempty proper subset.
Bits mutual_information(const DensityMatrix &rho, const SubsystemSet &cut);

} // namespace qcorr
