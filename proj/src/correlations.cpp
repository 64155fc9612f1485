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

#include "qcorr/correlations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "qcorr/error.hpp"

namespace qcorr {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCrossCheckTol = 1e-9;

void require_two_qubits(const DensityMatrix &rho) {
    if (rho.dims() != Dims{2, 2}) {
        throw Error(ErrorCode::DimMismatch, "only two-qubit states (dims [2, 2]) are supported");
    }
}

void require_index(std::size_t measured) {
    if (measured > 1) {
        throw Error(ErrorCode::DimMismatch,
                    "measured subsystem " + std::to_string(measured) +
                        " does not exist in a two-qubit state");
    }
}

int worker_count(int requested, std::size_t jobs) {
    int n = requested > 0 ? requested
                          : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(n), jobs));
}

// Fills out[i] = fn(i). Each slot is written by exactly one worker, so the
// result does not depend on the worker count.
std::vector<double> evaluate_all(std::size_t count, int threads,
                                 const std::function<double(std::size_t)> &fn) {
    std::vector<double> out(count);
    const int workers = worker_count(threads, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            out[i] = fn(i);
        }
        return out;
    }
    std::vector<std::jthread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    const std::size_t chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                const std::size_t lo = w * chunk;
                const std::size_t hi = std::min(count, lo + chunk);
                for (std::size_t i = lo; i < hi; ++i) {
                    out[i] = fn(i);
                }
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    pool.clear();
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

constexpr double kSimplexXTol = 1e-8;

struct SimplexResult {
    std::vector<double> x;
    double f;
    int evals;
};

// Nelder-Mead with reflection 1, expansion 2, contraction 1/2, shrink 1/2.
// Stops once vertex values agree within tol and vertices within kSimplexXTol,
// or after max_iters.
SimplexResult nelder_mead(const std::function<double(const std::vector<double> &)> &f,
                          std::vector<double> start, double start_value,
                          const std::vector<double> &steps, int max_iters, double tol) {
    const std::size_t n = start.size();
    std::vector<std::vector<double>> x{start};
    std::vector<double> fx{start_value};
    int evals = 0;
    for (std::size_t k = 0; k < n; ++k) {
        auto v = start;
        v[k] += steps[k];
        fx.push_back(f(v));
        x.push_back(std::move(v));
        ++evals;
    }
    auto along = [&](const std::vector<double> &from, const std::vector<double> &to,
                     double t) {
        std::vector<double> out(n);
        for (std::size_t k = 0; k < n; ++k) {
            out[k] = from[k] + t * (to[k] - from[k]);
        }
        return out;
    };

    for (int iter = 0; iter < max_iters; ++iter) {
        std::vector<std::size_t> order(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            order[i] = i;
        }
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
        {
            std::vector<std::vector<double>> xs;
            std::vector<double> fs;
            for (std::size_t i : order) {
                xs.push_back(x[i]);
                fs.push_back(fx[i]);
            }
            x = std::move(xs);
            fx = std::move(fs);
        }
        double width = 0.0;
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                width = std::max(width, std::abs(x[i][k] - x[0][k]));
            }
        }
        if (fx[n] - fx[0] < tol && width < kSimplexXTol) {
            break;
        }
        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                centroid[k] += x[i][k] / static_cast<double>(n);
            }
        }
        const auto xr = along(centroid, x[n], -1.0);
        const double fr = f(xr);
        ++evals;
        if (fr < fx[0]) {
            const auto xe = along(centroid, x[n], -2.0);
            const double fe = f(xe);
            ++evals;
            if (fe < fr) {
                x[n] = xe;
                fx[n] = fe;
            } else {
                x[n] = xr;
                fx[n] = fr;
            }
            continue;
        }
        if (fr < fx[n - 1]) {
            x[n] = xr;
            fx[n] = fr;
            continue;
        }
        const bool outside = fr < fx[n];
        const auto xc = outside ? along(centroid, xr, 0.5) : along(centroid, x[n], 0.5);
        const double fc = f(xc);
        ++evals;
        if (fc < (outside ? fr : fx[n])) {
            x[n] = xc;
            fx[n] = fc;
            continue;
        }
        for (std::size_t i = 1; i <= n; ++i) {
            x[i] = along(x[0], x[i], 0.5);
            fx[i] = f(x[i]);
            ++evals;
        }
    }
    const auto best = std::min_element(fx.begin(), fx.end()) - fx.begin();
    return {x[static_cast<std::size_t>(best)], fx[static_cast<std::size_t>(best)], evals};
}

Bits projective_objective(const DensityMatrix &rho, std::size_t measured, double theta,
                          double phi) {
    return conditional_entropy(rho, projective_pair(BlochAngles::canonical(theta, phi)),
                               measured);
}

} // namespace

void OptimizerConfig::validate() const {
    if (grid_theta <= 0 || grid_phi <= 0 || refine_iters <= 0 || !(refine_tol > 0.0) ||
        threads < 0 || trine_resolution <= 0) {
        throw Error(ErrorCode::OutOfRange, "optimizer config fields must be positive");
    }
}

ConditionalMinimum minimize_conditional_entropy(const DensityMatrix &rho,
                                                std::size_t measured,
                                                const OptimizerConfig &cfg) {
    cfg.validate();
    require_two_qubits(rho);
    require_index(measured);

    // theta in [0, pi/2] suffices: antipodal directions give the same pair.
    const std::size_t rows = static_cast<std::size_t>(cfg.grid_theta) + 1;
    const std::size_t cols = static_cast<std::size_t>(cfg.grid_phi);
    const double dtheta = (kPi / 2.0) / cfg.grid_theta;
    const double dphi = 2.0 * kPi / cfg.grid_phi;
    const auto grid = evaluate_all(rows * cols, cfg.threads, [&](std::size_t cell) {
        return projective_objective(rho, measured, (cell / cols) * dtheta,
                                    (cell % cols) * dphi);
    });
    // Strict comparison in row-major order: lowest theta index, then phi.
    std::size_t best = 0;
    for (std::size_t cell = 1; cell < grid.size(); ++cell) {
        if (grid[cell] < grid[best]) {
            best = cell;
        }
    }
    const double theta0 = (best / cols) * dtheta;
    const double phi0 = (best % cols) * dphi;

    const auto refined = nelder_mead(
        [&](const std::vector<double> &v) {
            return projective_objective(rho, measured, v[0], v[1]);
        },
        {theta0, phi0}, grid[best], {dtheta, dphi}, cfg.refine_iters, cfg.refine_tol);

    ConditionalMinimum out;
    out.evals = static_cast<int>(grid.size()) + refined.evals;
    if (refined.f < grid[best]) {
        out.value = refined.f;
        out.angles = BlochAngles::canonical(refined.x[0], refined.x[1]);
    } else {
        out.value = grid[best];
        out.angles = BlochAngles::canonical(theta0, phi0);
    }
    return out;
}

Bits trine_min_conditional_entropy(const DensityMatrix &rho, std::size_t measured,
                                   int resolution) {
    require_two_qubits(rho);
    require_index(measured);
    if (resolution <= 0) {
        throw Error(ErrorCode::OutOfRange, "trine resolution must be positive");
    }
    auto objective = [&](const std::vector<double> &v) {
        return conditional_entropy(rho, trine_povm(v[0], v[1], v[2]), measured);
    };
    const std::size_t r = static_cast<std::size_t>(resolution);
    const std::array<double, 3> step{2.0 * kPi / resolution, kPi / resolution,
                                     (2.0 * kPi / 3.0) / resolution};
    std::vector<double> best_x;
    double best_f = 0.0;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j <= r; ++j) {
            for (std::size_t k = 0; k < r; ++k) {
                std::vector<double> v{i * step[0], j * step[1], k * step[2]};
                const double f = objective(v);
                if (best_x.empty() || f < best_f) {
                    best_x = std::move(v);
                    best_f = f;
                }
            }
        }
    }
    const auto refined = nelder_mead(objective, best_x, best_f,
                                     {step[0], step[1], step[2]}, 400, 1e-12);
    return std::min(best_f, refined.f);
}

DirectionalMeasure classical_correlation(const DensityMatrix &rho, std::size_t measured,
                                         const OptimizerConfig &cfg) {
    const auto minimum = minimize_conditional_entropy(rho, measured, cfg);
    const auto unmeasured = partial_trace(rho, SubsystemSet{measured});
    DirectionalMeasure out;
    out.value = von_neumann_entropy(unmeasured) - minimum.value;
    out.direction = measured == 1 ? Direction::Leftward : Direction::Rightward;
    out.optimal_angles = minimum.angles;
    out.optimizer_evals = minimum.evals;
    if (cfg.trine_check) {
        out.trine_improvement =
            minimum.value - trine_min_conditional_entropy(rho, measured, cfg.trine_resolution);
    }
    return out;
}

DirectionalMeasure discord(const DensityMatrix &rho, std::size_t measured,
                           const OptimizerConfig &cfg) {
    const auto minimum = minimize_conditional_entropy(rho, measured, cfg);
    const std::size_t other = 1 - measured;
    const Bits s_measured = von_neumann_entropy(partial_trace(rho, SubsystemSet{other}));
    const Bits s_unmeasured = von_neumann_entropy(partial_trace(rho, SubsystemSet{measured}));
    const Bits s_joint = von_neumann_entropy(rho);

    const Bits direct = s_measured - s_joint + minimum.value;
    const Bits mutual = mutual_information(rho, SubsystemSet{0});
    const Bits classical = s_unmeasured - minimum.value;
    const Bits difference = mutual - classical;
    if (std::abs(direct - difference) > kCrossCheckTol) {
        throw Error(ErrorCode::Internal,
                    "discord forms disagree: " + std::to_string(direct) + " vs " +
                        std::to_string(difference) + " measuring " + std::to_string(measured));
    }

    DirectionalMeasure out;
    out.value = direct;
    out.direction = measured == 1 ? Direction::Leftward : Direction::Rightward;
    out.optimal_angles = minimum.angles;
    out.optimizer_evals = minimum.evals;
    if (cfg.trine_check) {
        out.trine_improvement =
            minimum.value - trine_min_conditional_entropy(rho, measured, cfg.trine_resolution);
    }
    return out;
}

Bits discord_oracle_grid(const DensityMatrix &rho, std::size_t measured, int resolution) {
    require_two_qubits(rho);
    require_index(measured);
    if (resolution < 2) {
        throw Error(ErrorCode::OutOfRange, "oracle resolution must be at least 2");
    }
    // rho = (I + a.s (x) I + I (x) b.s + T_ij s_i (x) s_j) / 4 with the
    // unmeasured factor written first.
    const std::array<const ComplexMatrix *, 3> sigma{&pauli_x(), &pauli_y(), &pauli_z()};
    const auto id = ComplexMatrix::identity(2);
    auto expect = [&](const ComplexMatrix &on_unmeasured, const ComplexMatrix &on_measured) {
        const auto op = measured == 1 ? kron(on_unmeasured, on_measured)
                                      : kron(on_measured, on_unmeasured);
        return (rho.matrix() * op).trace().real();
    };
    std::array<double, 3> a{}, b{};
    std::array<std::array<double, 3>, 3> t{};
    for (std::size_t i = 0; i < 3; ++i) {
        a[i] = expect(*sigma[i], id);
        b[i] = expect(id, *sigma[i]);
        for (std::size_t j = 0; j < 3; ++j) {
            t[i][j] = expect(*sigma[i], *sigma[j]);
        }
    }
    auto h2 = [](double x) {
        double h = 0.0;
        if (x > 0.0) h -= x * std::log2(x);
        if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
        return h;
    };

    double best = std::numeric_limits<double>::infinity();
    const int rows = resolution;
    const int cols = 2 * resolution;
    for (int i = 0; i < rows; ++i) {
        const double theta = kPi * i / (rows - 1);
        for (int j = 0; j < cols; ++j) {
            const double phi = 2.0 * kPi * j / cols;
            const std::array<double, 3> n{std::sin(theta) * std::cos(phi),
                                          std::sin(theta) * std::sin(phi), std::cos(theta)};
            const double bn = b[0] * n[0] + b[1] * n[1] + b[2] * n[2];
            double h = 0.0;
            for (double sign : {1.0, -1.0}) {
                const double weight = 1.0 + sign * bn; // 2 p
                if (0.5 * weight < kZeroProbability) {
                    continue;
                }
                double r2 = 0.0;
                for (std::size_t k = 0; k < 3; ++k) {
                    const double tn = t[k][0] * n[0] + t[k][1] * n[1] + t[k][2] * n[2];
                    const double rk = (a[k] + sign * tn) / weight;
                    r2 += rk * rk;
                }
                const double r = std::min(1.0, std::sqrt(r2));
                h += 0.5 * weight * h2(0.5 * (1.0 + r));
            }
            best = std::min(best, h);
        }
    }
    const Bits s_measured = von_neumann_entropy(partial_trace(rho, SubsystemSet{1 - measured}));
    return s_measured - von_neumann_entropy(rho) + best;
}

double concurrence(const DensityMatrix &rho) {
    require_two_qubits(rho);
    const auto yy = kron(pauli_y(), pauli_y());
    const auto flipped = yy * conjugate(rho.matrix()) * yy;
    const auto root = psd_sqrt(rho.matrix());
    const auto product = root * flipped * root;
    // Symmetrize against roundoff before the second square root.
    const auto hermitian = Complex(0.5) * (product + dagger(product));
    auto lambdas = eigvals_hermitian(psd_sqrt(hermitian));
    std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
    const double c = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3];
    return std::clamp(c, 0.0, 1.0);
}

Bits eof_two_qubits(const DensityMatrix &rho) {
    const double c = concurrence(rho);
    return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

Bits koashi_winter_residual(const PureState &psi, std::size_t a, std::size_t b,
                            std::size_t c, const OptimizerConfig &cfg) {
    if (psi.dims() != Dims{2, 2, 2}) {
        throw Error(ErrorCode::DimMismatch, "Koashi-Winter audit needs a three-qubit state");
    }
    if (a > 2 || b > 2 || c > 2 || a == b || b == c || a == c) {
        throw Error(ErrorCode::BadPermutation, "(a, b, c) must permute {0, 1, 2}");
    }
    const auto rho = density_from_pure(psi);
    const Bits s_a = von_neumann_entropy(partial_trace(rho, SubsystemSet{b, c}));
    const Bits e_ab = eof_two_qubits(partial_trace(rho, SubsystemSet{c}));
    // Retained factors keep tensor order, so c sits first iff c < a.
    const auto rho_ac = partial_trace(rho, SubsystemSet{b});
    const Bits j_ac = classical_correlation(rho_ac, c < a ? 0 : 1, cfg).value;
    return s_a - e_ab - j_ac;
}

} // namespace qcorr
