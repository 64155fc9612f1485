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

// qcorr command-line front end.
//
//   qcorr reproduce [--format table|json|csv] [optimizer flags]
//   qcorr measure STATE_FILE --measure entropy|mi|discord|j|eof|concurrence
//                 [--measured N] [--format ...] [optimizer flags]
//   qcorr kw-audit --count N --seed S [--format ...] [optimizer flags]
//
// Exit status: 0 success / all checks pass, 1 a check failed, 2 usage,
// parse, validation or internal error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "qcorr/correlations.hpp"
#include "qcorr/error.hpp"
#include "qcorr/report_format.hpp"
#include "qcorr/scenario.hpp"
#include "qcorr/state_io.hpp"

namespace {

using namespace qcorr;

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct CommonOptions {
    std::string format = "table";
    std::string out;
    OptimizerConfig cfg;
};

void add_common(CLI::App &cmd, CommonOptions &opts) {
    cmd.add_option("--format", opts.format, "table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    cmd.add_option("--grid-theta", opts.cfg.grid_theta, "polar grid intervals on [0, pi/2]")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--grid-phi", opts.cfg.grid_phi, "azimuthal grid points on [0, 2 pi)")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--refine-iters", opts.cfg.refine_iters, "simplex iteration cap")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--refine-tol", opts.cfg.refine_tol, "simplex stop tolerance (bits)")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--out", opts.out, "write output to this file instead of stdout");
}

int threads_from_env() {
    const char *raw = std::getenv("QCORR_THREADS");
    if (raw == nullptr || *raw == '\0') {
        return 0;
    }
    char *end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (*end != '\0' || value < 1 || value > 1024) {
        throw Error(ErrorCode::ParseError, "QCORR_THREADS must be a positive integer");
    }
    return static_cast<int>(value);
}

void emit(const CommonOptions &opts, const std::string &text) {
    if (opts.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(opts.out);
    if (!file) {
        throw Error(ErrorCode::ParseError, "cannot write " + opts.out);
    }
    file << text;
}

int cmd_reproduce(const CommonOptions &opts) {
    const auto result = run_scenario(opts.cfg);
    const auto checks = scenario_checks(result);
    emit(opts, render_reproduce(result, checks, parse_output_format(opts.format)));
    const bool ok = std::all_of(checks.begin(), checks.end(),
                                [](const Check &c) { return c.passed(); });
    return ok ? 0 : kExitFail;
}

int cmd_measure(const CommonOptions &opts, const std::string &path,
                const std::string &measure, std::size_t measured) {
    const auto rho = as_density(load_state_file(path));
    if (measured >= rho.subsystem_count()) {
        throw Error(ErrorCode::BadSubsystemSet,
                    "--measured " + std::to_string(measured) + " exceeds the " +
                        std::to_string(rho.subsystem_count()) + " subsystems in the file");
    }

    double value = 0.0;
    std::optional<DirectionalMeasure> optimized;
    if (measure == "entropy") {
        value = von_neumann_entropy(rho);
    } else if (measure == "mi") {
        value = mutual_information(rho, SubsystemSet{measured});
    } else if (measure == "discord") {
        optimized = discord(rho, measured, opts.cfg);
    } else if (measure == "j") {
        optimized = classical_correlation(rho, measured, opts.cfg);
    } else if (measure == "eof") {
        value = eof_two_qubits(rho);
    } else {
        value = concurrence(rho);
    }
    if (optimized) {
        value = optimized->value;
    }
    const char *direction = measured == 1 ? "leftward" : "rightward";

    std::string text;
    switch (parse_output_format(opts.format)) {
    case OutputFormat::Json: {
        nlohmann::ordered_json doc;
        doc["measure"] = measure;
        doc["value"] = round_to_printed(value);
        doc["measured"] = measured;
        if (optimized) {
            doc["direction"] = direction;
            doc["theta"] = round_to_printed(optimized->optimal_angles.theta);
            doc["phi"] = round_to_printed(optimized->optimal_angles.phi);
            doc["evaluations"] = optimized->optimizer_evals;
        }
        text = doc.dump(2) + "\n";
        break;
    }
    case OutputFormat::Csv:
        text = "measure,value,measured,direction,theta,phi,evaluations\n";
        if (optimized) {
            text += fmt::format("{},{},{},{},{},{},{}\n", measure, format_number(value),
                                measured, direction,
                                format_number(optimized->optimal_angles.theta),
                                format_number(optimized->optimal_angles.phi),
                                optimized->optimizer_evals);
        } else {
            text += fmt::format("{},{},{},,,,\n", measure, format_number(value), measured);
        }
        break;
    case OutputFormat::Table:
        text = fmt::format("{} = {}\nmeasured = {}\n", measure, format_number(value), measured);
        if (optimized) {
            text += fmt::format("direction = {}\ntheta = {}\nphi = {}\nevaluations = {}\n",
                                direction, format_number(optimized->optimal_angles.theta),
                                format_number(optimized->optimal_angles.phi),
                                optimized->optimizer_evals);
        }
        break;
    }
    emit(opts, text);
    return 0;
}

int cmd_kw_audit(const CommonOptions &opts, int count, std::uint64_t seed) {
    constexpr std::array<std::array<std::size_t, 3>, 3> cyclic{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
    constexpr double lower = -1e-6;
    constexpr double upper = 2e-3;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    int samples = 0;
    for (int i = 0; i < count; ++i) {
        const auto psi = random_pure_state({2, 2, 2}, seed + static_cast<std::uint64_t>(i));
        for (const auto &perm : cyclic) {
            const double r = koashi_winter_residual(psi, perm[0], perm[1], perm[2], opts.cfg);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
            sum += r;
            ++samples;
        }
    }
    const double mean = sum / samples;
    const bool ok = lo >= lower && hi <= upper;
    const char *verdict = ok ? "PASS" : "FAIL";

    std::string text;
    switch (parse_output_format(opts.format)) {
    case OutputFormat::Json: {
        nlohmann::ordered_json doc;
        doc["count"] = count;
        doc["seed"] = seed;
        doc["residuals"] = samples;
        doc["min"] = round_to_printed(lo);
        doc["max"] = round_to_printed(hi);
        doc["mean"] = round_to_printed(mean);
        doc["lower"] = round_to_printed(lower);
        doc["upper"] = round_to_printed(upper);
        doc["status"] = verdict;
        text = doc.dump(2) + "\n";
        break;
    }
    case OutputFormat::Csv:
        text = "count,seed,residuals,min,max,mean,status\n" +
               fmt::format("{},{},{},{},{},{},{}\n", count, seed, samples, format_number(lo),
                           format_number(hi), format_number(mean), verdict);
        break;
    case OutputFormat::Table:
        text = fmt::format("states = {}\nseed = {}\nresiduals = {}\nmin = {}\nmax = {}\n"
                           "mean = {}\n{} residuals within [{}, {}]\n",
                           count, seed, samples, format_number(lo), format_number(hi),
                           format_number(mean), verdict, format_number(lower),
                           format_number(upper));
        break;
    }
    emit(opts, text);
    return ok ? 0 : kExitFail;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum correlation measures for small finite-dimensional states"};
    app.require_subcommand(1);

    CommonOptions reproduce_opts;
    auto *reproduce = app.add_subcommand("reproduce", "GHZ filter scenario tables and checks");
    add_common(*reproduce, reproduce_opts);

    CommonOptions measure_opts;
    std::string state_path;
    std::string measure_name;
    std::size_t measured = 1;
    auto *measure = app.add_subcommand("measure", "evaluate one measure on a state file");
    add_common(*measure, measure_opts);
    measure->add_option("state", state_path, "JSON state file")->required();
    measure->add_option("--measure", measure_name, "which measure")
        ->required()
        ->check(CLI::IsMember({"entropy", "mi", "discord", "j", "eof", "concurrence"}));
    measure->add_option("--measured", measured,
                        "measured subsystem (discord, j) or cut side (mi)");

    CommonOptions audit_opts;
    int count = 100;
    std::uint64_t seed = 7;
    auto *audit = app.add_subcommand("kw-audit", "Koashi-Winter identity on random states");
    add_common(*audit, audit_opts);
    audit->add_option("--count", count, "number of random states")->check(CLI::PositiveNumber);
    audit->add_option("--seed", seed, "first seed; state i uses seed + i");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitError;
    }

    try {
        const int threads = threads_from_env();
        for (auto *opts : {&reproduce_opts, &measure_opts, &audit_opts}) {
            opts->cfg.threads = threads;
        }
        if (*reproduce) {
            return cmd_reproduce(reproduce_opts);
        }
        if (*measure) {
            return cmd_measure(measure_opts, state_path, measure_name, measured);
        }
        return cmd_kw_audit(audit_opts, count, seed);
    } catch (const std::exception &e) {
        std::cerr << "qcorr: " << e.what() << "\n";
        return kExitError;
    }
}
