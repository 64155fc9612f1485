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

#include "qcorr/state_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qcorr/error.hpp"

namespace qcorr {

namespace {

using nlohmann::json;

Complex parse_pair(const json &node, const std::string &where) {
    if (!node.is_array() || node.size() != 2 || !node[0].is_number() ||
        !node[1].is_number()) {
        throw Error(ErrorCode::ParseError, where + ": expected [re, im] pair of numbers");
    }
    return {node[0].get<double>(), node[1].get<double>()};
}

} // namespace

AnyState parse_state(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw Error(ErrorCode::ParseError, std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw Error(ErrorCode::ParseError, "document must be a JSON object");
    }
    if (!doc.contains("dims") || !doc["dims"].is_array() || doc["dims"].empty()) {
        throw Error(ErrorCode::ParseError, "dims: expected a nonempty list of integers");
    }
    Dims dims;
    for (std::size_t k = 0; k < doc["dims"].size(); ++k) {
        const auto &d = doc["dims"][k];
        if (!d.is_number_integer() || d.get<long long>() < 1) {
            throw Error(ErrorCode::ParseError,
                        "dims[" + std::to_string(k) + "]: expected a positive integer");
        }
        dims.push_back(d.get<std::size_t>());
    }
    const std::size_t n = total_dim(dims);
    const bool has_matrix = doc.contains("matrix");
    const bool has_amplitudes = doc.contains("amplitudes");
    if (has_matrix == has_amplitudes) {
        throw Error(ErrorCode::ParseError,
                    "exactly one of \"matrix\" or \"amplitudes\" must be given");
    }

    if (has_amplitudes) {
        const auto &amps = doc["amplitudes"];
        if (!amps.is_array() || amps.size() != n) {
            throw Error(ErrorCode::ParseError,
                        "amplitudes: expected " + std::to_string(n) + " [re, im] pairs");
        }
        std::vector<Complex> values;
        for (std::size_t i = 0; i < n; ++i) {
            values.push_back(parse_pair(amps[i], "amplitudes[" + std::to_string(i) + "]"));
        }
        return PureState(std::move(values), std::move(dims));
    }

    const auto &rows = doc["matrix"];
    if (!rows.is_array() || rows.size() != n) {
        throw Error(ErrorCode::ParseError,
                    "matrix: expected " + std::to_string(n) + " rows");
    }
    std::vector<Complex> entries;
    entries.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!rows[r].is_array() || rows[r].size() != n) {
            throw Error(ErrorCode::ParseError, "matrix row " + std::to_string(r) +
                                                   ": expected " + std::to_string(n) +
                                                   " entries");
        }
        for (std::size_t c = 0; c < n; ++c) {
            entries.push_back(parse_pair(rows[r][c], "matrix row " + std::to_string(r) +
                                                         " column " + std::to_string(c)));
        }
    }
    return DensityMatrix(ComplexMatrix(n, std::move(entries)), std::move(dims));
}

AnyState load_state_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open state file " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_state(buffer.str());
}

DensityMatrix as_density(const AnyState &state) {
    if (const auto *rho = std::get_if<DensityMatrix>(&state)) {
        return *rho;
    }
    return density_from_pure(std::get<PureState>(state));
}

} // namespace qcorr
