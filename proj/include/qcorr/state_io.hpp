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

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "qcorr/states.hpp"

namespace qcorr {

using AnyState = std::variant<DensityMatrix, PureState>;

/**
 * Parses a JSON state document:
 *
 *   {"dims": [2, 2], "matrix": [[[re, im], ...], ...]}
 *   {"dims": [2, 2], "amplitudes": [[re, im], ...]}
 *
 * Exactly one of "matrix" / "amplitudes" must be present. Malformed input
 * throws ParseError naming the offending field (with row and column for
 * matrix entries); a well-formed but unphysical state throws the
 * validation error of DensityMatrix or PureState.
 */
AnyState parse_state(std::string_view text);

AnyState load_state_file(const std::filesystem::path &path);

DensityMatrix as_density(const AnyState &state);

} // namespace qcorr
