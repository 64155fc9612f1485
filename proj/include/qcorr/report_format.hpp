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

#include <string>
#include <string_view>
#include <vector>

#include "qcorr/scenario.hpp"

namespace qcorr {

enum class OutputFormat { Table, Json, Csv };

/// Throws ParseError for anything but "table", "json" or "csv".
OutputFormat parse_output_format(std::string_view name);

/// 12 significant digits, '.' decimal point regardless of locale.
std::string format_number(double value);

/// The double nearest to format_number(value).
double round_to_printed(double value);

/**
 * Serializes the scenario tables and checks.
 *
 * JSON: {"pre": {measure: value, ...}, "post": {...},
 *        "checks": [{"name", "value", "lower", "upper", "status"}, ...],
 *        "status": "PASS" | "FAIL"}
 * CSV:  header "stage,measure,value,status"; one row per pre/post measure
 *       (empty status) followed by one "check" row per check.
 */
std::string render_reproduce(const ScenarioResult &result, const std::vector<Check> &checks,
                             OutputFormat format);

} // namespace qcorr
