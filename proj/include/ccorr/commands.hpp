// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccorr/config.hpp"
#include "ccorr/correntropy.hpp"
#include "ccorr/mccc.hpp"
#include "ccorr/quadrature.hpp"
#include "ccorr/random.hpp"
#include "ccorr/report_io.hpp"
#include "ccorr/rls.hpp"
#include "ccorr/sim.hpp"

// Entry points behind the `ccorr` command-line tool.

namespace ccorr {

inline constexpr const char* kToolVersion = "1.0.0";

struct RunOptions {
    std::optional<std::uint64_t> seed;       ///< overrides scenario.seed
    std::optional<std::size_t> parallelism;  ///< default: trials capped at hardware threads
};

struct RunManifest {
    std::string command;
    std::string tool_version = kToolVersion;
    std::string config_text;  ///< effective config, re-serialized
    std::uint64_t seed = 0;
    std::vector<std::filesystem::path> outputs;
    double wall_seconds = 0.0;

    [[nodiscard]] nlohmann::json to_json() const {
        nlohmann::json files = nlohmann::json::array();
        for (const auto& p : outputs) files.push_back(p.generic_string());
        return {{"command", command},     {"tool_version", tool_version}, {"seed", seed},
                {"config", config_text},  {"generator", kGeneratorName},  {"outputs", files},
                {"wall_clock_seconds", wall_seconds}};
    }
};

namespace detail {

inline ScenarioConfig effective_config(const std::string& config_path, const RunOptions& opts) {
    ScenarioConfig cfg = load_config(config_path);
    if (opts.seed) cfg.seed = *opts.seed;
    return cfg;
}

inline std::size_t effective_parallelism(const ScenarioConfig& cfg, const RunOptions& opts) {
    return opts.parallelism.value_or(default_parallelism(cfg.trials));
}

/// Writes wsnr_mean.csv and report.json into `dir`, appending their paths.
inline MonteCarloReport run_into(const ScenarioConfig& cfg, std::size_t parallelism,
                                 const std::filesystem::path& dir, std::vector<std::filesystem::path>& outputs) {
    ensure_directory(dir);
    MonteCarloReport report = monte_carlo(cfg, parallelism);
    write_text_file(dir / "wsnr_mean.csv", wsnr_mean_csv(report));
    outputs.push_back(dir / "wsnr_mean.csv");
    write_text_file(dir / "report.json", to_json(report).dump(2) + "\n");
    outputs.push_back(dir / "report.json");
    return report;
}

inline void finish_manifest(RunManifest& m, const std::filesystem::path& dir,
                            std::chrono::steady_clock::time_point start) {
    const auto path = dir / "manifest.json";
    m.outputs.push_back(path);
    m.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_text_file(path, m.to_json().dump(2) + "\n");
}

}  // namespace detail

/// Monte Carlo run of one scenario file; writes wsnr_mean.csv, report.json, manifest.json.
inline RunManifest cmd_run(const std::string& config_path, const std::filesystem::path& output_dir,
                           const RunOptions& opts = {}) {
    const auto start = std::chrono::steady_clock::now();
    const ScenarioConfig cfg = detail::effective_config(config_path, opts);
    RunManifest m;
    m.command = "run";
    m.config_text = format_config(cfg);
    m.seed = cfg.seed;
    detail::run_into(cfg, detail::effective_parallelism(cfg, opts), output_dir, m.outputs);
    detail::finish_manifest(m, output_dir, start);
    return m;
}

/// Directory name used for one kernel size of a sweep.
inline std::string sweep_subdir(double sigma) { return "sigma_" + format_double(sigma); }

/// One run per kernel size (in sigma_<value>/), plus sweep_summary.csv with
/// columns sigma, steady_mccc_db, steady_rls_db, gap_db.
inline RunManifest cmd_sweep(const std::string& config_path, const std::vector<double>& sigmas,
                             const std::filesystem::path& output_dir, const RunOptions& opts = {}) {
    const auto start = std::chrono::steady_clock::now();
    if (sigmas.empty()) throw ConfigError("sweep: the sigma list is empty");
    for (double s : sigmas) {
        if (!(s > 0.0) || !std::isfinite(s)) {
            throw ConfigError("sweep: kernel size " + format_double(s) + " is not a finite positive number");
        }
    }
    const ScenarioConfig base = detail::effective_config(config_path, opts);
    RunManifest m;
    m.command = "sweep";
    m.config_text = format_config(base);
    m.seed = base.seed;
    ensure_directory(output_dir);

    std::string summary = "sigma,steady_mccc_db,steady_rls_db,gap_db\n";
    for (double s : sigmas) {
        ScenarioConfig cfg = base;
        cfg.kernel_sigma = s;
        const auto report =
            detail::run_into(cfg, detail::effective_parallelism(cfg, opts), output_dir / sweep_subdir(s), m.outputs);
        summary += format_csv_double(s) + ',' + format_csv_double(report.mccc.steady_state_db) + ',' +
                   format_csv_double(report.rls.steady_state_db) + ',' +
                   format_csv_double(report.steady_state_margin_db()) + '\n';
    }
    write_text_file(output_dir / "sweep_summary.csv", summary);
    m.outputs.push_back(output_dir / "sweep_summary.csv");
    detail::finish_manifest(m, output_dir, start);
    return m;
}

struct OracleCheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct OracleCheckReport {
    std::vector<OracleCheckResult> checks;

    [[nodiscard]] bool all_passed() const noexcept {
        for (const auto& c : checks) {
            if (!c.passed) return false;
        }
        return true;
    }
};

namespace detail {

inline std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

inline ComplexSampleSet random_complex_set(Engine& eng, std::size_t n, double scale) {
    std::vector<ComplexScalar> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(scale * standard_normal(eng), scale * standard_normal(eng));
    return ComplexSampleSet(std::move(v));
}

inline PairedDataset impulsive_dataset(Engine& eng, std::size_t n, ComplexScalar w) {
    const NoiseModel noise = NoiseModel::impulsive_default();
    std::vector<ComplexScalar> xs, ds;
    for (std::size_t i = 0; i < n; ++i) {
        const ComplexScalar x(standard_normal(eng) / std::numbers::sqrt2, standard_normal(eng) / std::numbers::sqrt2);
        xs.push_back(x);
        ds.push_back(w * x + sample_noise(noise, eng));
    }
    return PairedDataset(ComplexSampleSet(std::move(xs)), ComplexSampleSet(std::move(ds)));
}

}  // namespace detail

/// Self-checks of the closed forms against their oracles. `tolerance` bounds
/// the relative closed-form vs quadrature error; the other checks use fixed
/// thresholds (1e-10 noiseless recovery, 1e-3 large-sigma LS gap, 1e-8 kernel mass).
inline OracleCheckReport cmd_oracle_check(std::uint64_t seed, double tolerance, std::ostream& out) {
    if (!(tolerance > 0.0)) throw ConfigError("oracle-check: tolerance must be > 0");
    OracleCheckReport rep;
    auto record = [&](std::string name, bool ok, std::string detail) {
        out << (ok ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
        rep.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    {
        Engine eng(derive_seed(seed, 0));
        const double sigmas[] = {0.5, 1.0, 2.0};
        double worst = 0.0;
        double floor = 0.0;
        std::string error;
        for (int k = 0; k < 6 && error.empty(); ++k) {
            const auto n = 1 + static_cast<std::size_t>(uniform01(eng) * 20.0);
            const KernelBandwidth bw(sigmas[k % 3]);
            const auto c1 = detail::random_complex_set(eng, n, 1.0);
            const auto c2 = detail::random_complex_set(eng, n, 1.0);
            try {
                const double closed = complex_correntropy(c1, c2, bw);
                const auto integral = integrate_correntropy(c1, c2, bw, QuadratureSpec::covering(c1, c2, bw));
                worst = std::max(worst, std::abs(closed - integral.value) / closed);
                floor = std::max(floor, integral.relative_error_bound);
            } catch (const QuadratureError& e) {
                error = e.what();
            }
        }
        const std::string summary = "max relative error " + detail::sci(worst) + ", quadrature accuracy " +
                                    detail::sci(floor) + " (tolerance " + detail::sci(tolerance) + ")";
        if (!error.empty()) {
            record("quadrature_equivalence", false, error);
        } else if (tolerance < floor) {
            record("quadrature_equivalence", false, "tolerance below quadrature accuracy: " + summary);
        } else {
            record("quadrature_equivalence", worst < tolerance, summary);
        }
    }
    {
        Engine eng(derive_seed(seed, 1));
        const ComplexScalar truth(2.0, 3.0);
        std::vector<ComplexScalar> xs, ds;
        for (int i = 0; i < 50; ++i) {
            xs.emplace_back(standard_normal(eng), standard_normal(eng));
            ds.push_back(truth * xs.back());
        }
        const PairedDataset data{ComplexSampleSet(xs), ComplexSampleSet(ds)};
        const auto res = batch_fixed_point(data, KernelBandwidth(1.0));
        const double err = std::abs(res.weight.value() - truth);
        record("noiseless_fixed_point", res.converged && err < 1e-10,
               "|w - (2+3j)| = " + detail::sci(err) + " after " + std::to_string(res.iterations) + " iterations");
    }
    {
        Engine eng(derive_seed(seed, 2));
        const PairedDataset data = detail::impulsive_dataset(eng, 200, {0.8, -0.4});
        const FilterWeight ls = least_squares_weight(data);
        FixedPointConfig fp;
        fp.initial_weight = ls;
        const auto res = batch_fixed_point(data, KernelBandwidth(100.0), fp);
        const double gap = std::abs(res.weight.value() - ls.value());
        record("large_sigma_least_squares", res.converged && gap < 1e-3,
               "|w_mccc(sigma=100) - w_ls| = " + detail::sci(gap));
    }
    {
        double worst = 0.0;
        for (double s : {0.5, 1.0, 2.0}) {
            const KernelBandwidth bw(s);
            const double mass = trapezoid([&](double u) { return gaussian_kernel(u, bw); }, -12.0 * s, 12.0 * s, 2001);
            worst = std::max(worst, std::abs(mass - 1.0));
        }
        record("kernel_normalization", worst < 1e-8, "max |integral - 1| = " + detail::sci(worst));
    }
    return rep;
}

}  // namespace ccorr
