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

#include "qcorr/report_format.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include <fmt/format.h>
#include <json.hpp>

#include "qcorr/error.hpp"

namespace qcorr {

namespace {

bool all_passed(const std::vector<Check> &checks) {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check &c) { return c.passed(); });
}

const char *status(bool ok) { return ok ? "PASS" : "FAIL"; }

nlohmann::ordered_json report_json(const CorrelationReport &report) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto &[name, value] : report.flatten()) {
        out[name] = round_to_printed(value);
    }
    return out;
}

std::string render_json(const ScenarioResult &result, const std::vector<Check> &checks) {
    nlohmann::ordered_json doc;
    doc["pre"] = report_json(result.pre);
    doc["post"] = report_json(result.post);
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto &check : checks) {
        nlohmann::ordered_json row;
        row["name"] = check.name;
        row["value"] = round_to_printed(check.value);
        row["lower"] = round_to_printed(check.lower);
        row["upper"] = round_to_printed(check.upper);
        row["status"] = status(check.passed());
        doc["checks"].push_back(std::move(row));
    }
    doc["status"] = status(all_passed(checks));
    return doc.dump(2) + "\n";
}

std::string render_csv(const ScenarioResult &result, const std::vector<Check> &checks) {
    std::string out = "stage,measure,value,status\n";
    for (const auto *report : {&result.pre, &result.post}) {
        const char *stage = report->stage == Stage::Pre ? "pre" : "post";
        for (const auto &[name, value] : report->flatten()) {
            out += fmt::format("{},{},{},\n", stage, name, format_number(value));
        }
    }
    for (const auto &check : checks) {
        out += fmt::format("check,{},{},{}\n", check.name, format_number(check.value),
                           status(check.passed()));
    }
    return out;
}

std::string render_table(const ScenarioResult &result, const std::vector<Check> &checks) {
    const auto pre = result.pre.flatten();
    const auto post = result.post.flatten();
    std::string out = fmt::format("{:<32} {:>20} {:>20}\n", "measure", "pre", "post");
    for (const auto &[name, value] : post) {
        const auto match = std::find_if(pre.begin(), pre.end(),
                                         [&](const auto &entry) { return entry.first == name; });
        out += fmt::format("{:<32} {:>20} {:>20}\n", name,
                           match == pre.end() ? std::string("-") : format_number(match->second),
                           format_number(value));
    }
    out += "\n";
    for (const auto &check : checks) {
        out += fmt::format("{} {:<36} value={} range=[{}, {}]\n", status(check.passed()),
                           check.name, format_number(check.value), format_number(check.lower),
                           format_number(check.upper));
    }
    out += fmt::format("overall: {}\n", status(all_passed(checks)));
    return out;
}

} // namespace

OutputFormat parse_output_format(std::string_view name) {
    if (name == "table") return OutputFormat::Table;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    throw Error(ErrorCode::ParseError,
                "unknown format \"" + std::string(name) + "\" (table, json, csv)");
}

std::string format_number(double value) {
    // Fold -0 into 0.
    return fmt::format("{:.12g}", value + 0.0);
}

double round_to_printed(double value) {
    const std::string text = format_number(value);
    double out = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), out);
    return out;
}

std::string render_reproduce(const ScenarioResult &result, const std::vector<Check> &checks,
                             OutputFormat format) {
    switch (format) {
    case OutputFormat::Json: return render_json(result, checks);
    case OutputFormat::Csv: return render_csv(result, checks);
    case OutputFormat::Table: return render_table(result, checks);
    }
    return {};
}

} // namespace qcorr
