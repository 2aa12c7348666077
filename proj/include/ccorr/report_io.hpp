// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ccorr/config.hpp"
#include "ccorr/errors.hpp"
#include "ccorr/random.hpp"
#include "ccorr/sim.hpp"

namespace ccorr {

/// 17 significant digits, '.' separator, locale independent.
inline std::string format_csv_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

/// iteration, wsnr_mccc_db, wsnr_rls_db; iterations are 1-based.
inline std::string wsnr_mean_csv(const MonteCarloReport& r) {
    std::ostringstream out;
    out << "iteration,wsnr_mccc_db,wsnr_rls_db\n";
    for (std::size_t k = 0; k < r.mccc.mean.size(); ++k) {
        out << (k + 1) << ',' << format_csv_double(r.mccc.mean[k]) << ',' << format_csv_double(r.rls.mean[k])
            << '\n';
    }
    return out.str();
}

inline nlohmann::json to_json(FilterWeight w) { return nlohmann::json{{"re", w.re()}, {"im", w.im()}}; }

inline nlohmann::json to_json(const ScenarioConfig& cfg) {
    nlohmann::json noise = nlohmann::json::array();
    for (const auto& c : cfg.noise.components()) {
        noise.push_back({{"probability", c.probability}, {"mean", c.mean}, {"std", c.std}});
    }
    return {
        {"true_weight", to_json(cfg.true_weight)},
        {"iterations", cfg.iterations},
        {"trials", cfg.trials},
        {"seed", cfg.seed},
        {"input_std", cfg.input_std},
        {"input_distribution", "circular complex Gaussian, std input_std/sqrt(2) per part"},
        {"initial_weight_distribution", "circular complex Gaussian, std 1/sqrt(2) per part"},
        {"wsnr_cap_db", cfg.wsnr_cap_db},
        {"mccc", {{"kernel_sigma", cfg.kernel_sigma}, {"epsilon", cfg.mccc_epsilon}}},
        {"rls", {{"lambda", cfg.rls_lambda}, {"p0", cfg.rls_p0}}},
        {"noise_components", noise},
    };
}

/// Full Monte Carlo report: config echo, generator, per-trial and mean series.
inline nlohmann::json to_json(const MonteCarloReport& r) {
    nlohmann::json trials = nlohmann::json::array();
    for (std::size_t i = 0; i < r.trials.size(); ++i) {
        const auto& t = r.trials[i];
        trials.push_back({
            {"trial", i},
            {"seed", r.trial_seeds[i]},
            {"initial_weight", to_json(t.initial_weight)},
            {"final_weight", {{"mccc", to_json(t.final_mccc)}, {"rls", to_json(t.final_rls)}}},
            {"wsnr_db", {{"mccc", t.mccc}, {"rls", t.rls}}},
        });
    }
    return {
        {"config", to_json(r.config)},
        {"seed", r.config.seed},
        {"generator", kGeneratorName},
        {"steady_state_window", std::min<std::size_t>(kSteadyStateWindow, r.mccc.mean.size())},
        {"algorithms",
         {{"mccc", {{"label", "MCCC recursive fixed point"},
                    {"steady_state_db", r.mccc.steady_state_db},
                    {"mean_wsnr_db", r.mccc.mean}}},
          {"rls", {{"label", "complex RLS"},
                   {"steady_state_db", r.rls.steady_state_db},
                   {"mean_wsnr_db", r.rls.mean}}}}},
        {"steady_state_margin_db", r.steady_state_margin_db()},
        {"trials", trials},
    };
}

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

inline void ensure_directory(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw IoError("cannot create output directory '" + dir.string() + "'" + (ec ? ": " + ec.message() : ""));
    }
}

}  // namespace ccorr
