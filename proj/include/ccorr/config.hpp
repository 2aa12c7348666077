// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "ccorr/errors.hpp"
#include "ccorr/sim.hpp"

// Scenario files are INI-style text:
//
//   # comment
//   [scenario]
//   true_weight = 0.8, -0.4
//   iterations = 300
//   [noise]
//   component = 0.95, 0.0, 0.05    # probability, mean, std
//   component = 0.05, 0.0, 5.0
//
// Keys left out keep their defaults. Unknown sections or keys are rejected.
// A [noise] section replaces the default mixture entirely.

namespace ccorr {

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split_commas(std::string_view s) {
    std::vector<std::string_view> out;
    for (;;) {
        const auto comma = s.find(',');
        out.push_back(trim(s.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

template <class T>
T parse_number(std::string_view text, const std::string& field) {
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw ConfigError("config field '" + field + "': cannot parse '" + std::string(text) + "' as a number");
    }
    return value;
}

inline std::vector<double> parse_reals(std::string_view text, std::size_t count, const std::string& field) {
    const auto parts = split_commas(text);
    if (parts.size() != count) {
        throw ConfigError("config field '" + field + "': expected " + std::to_string(count) +
                          " comma-separated values, got " + std::to_string(parts.size()));
    }
    std::vector<double> out;
    for (auto p : parts) out.push_back(parse_number<double>(p, field));
    return out;
}

}  // namespace detail

/// Parses scenario text. Errors name the offending `section.key` and line.
inline ScenarioConfig parse_config(std::string_view text) {
    ScenarioConfig cfg;
    std::optional<std::vector<MixtureComponent>> noise;
    std::string section;
    std::size_t line_no = 0;

    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const std::string where = " (line " + std::to_string(line_no) + ")";

        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("malformed section header" + where);
            section = std::string(detail::trim(line.substr(1, line.size() - 2)));
            if (section != "scenario" && section != "mccc" && section != "rls" && section != "noise") {
                throw ConfigError("unknown config section '" + section + "'" + where);
            }
            if (section == "noise" && !noise) noise.emplace();
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'" + where);
        const std::string key(detail::trim(line.substr(0, eq)));
        const std::string_view value = detail::trim(line.substr(eq + 1));
        if (section.empty()) throw ConfigError("key '" + key + "' appears before any section" + where);
        const std::string field = section + "." + key;

        try {
            if (section == "scenario" && key == "true_weight") {
                const auto v = detail::parse_reals(value, 2, field);
                cfg.true_weight = FilterWeight(v[0], v[1]);
            } else if (section == "scenario" && key == "iterations") {
                cfg.iterations = detail::parse_number<int>(value, field);
            } else if (section == "scenario" && key == "trials") {
                cfg.trials = detail::parse_number<int>(value, field);
            } else if (section == "scenario" && key == "seed") {
                cfg.seed = detail::parse_number<std::uint64_t>(value, field);
            } else if (section == "scenario" && key == "input_std") {
                cfg.input_std = detail::parse_number<double>(value, field);
            } else if (section == "scenario" && key == "wsnr_cap_db") {
                cfg.wsnr_cap_db = detail::parse_number<double>(value, field);
            } else if (section == "mccc" && key == "kernel_sigma") {
                cfg.kernel_sigma = detail::parse_number<double>(value, field);
            } else if (section == "mccc" && key == "epsilon") {
                cfg.mccc_epsilon = detail::parse_number<double>(value, field);
            } else if (section == "rls" && key == "lambda") {
                cfg.rls_lambda = detail::parse_number<double>(value, field);
            } else if (section == "rls" && key == "p0") {
                cfg.rls_p0 = detail::parse_number<double>(value, field);
            } else if (section == "noise" && key == "component") {
                const auto v = detail::parse_reals(value, 3, field);
                noise->push_back({v[0], v[1], v[2]});
            } else {
                throw ConfigError("unknown config field '" + field + "'");
            }
        } catch (const ConfigError& e) {
            throw ConfigError(e.what() + where);
        } catch (const DomainError& e) {
            throw ConfigError("config field '" + field + "': " + e.what() + where);
        }
    }

    if (noise) {
        try {
            cfg.noise = NoiseModel(std::move(*noise));
        } catch (const DomainError& e) {
            throw ConfigError(std::string("config section 'noise': ") + e.what());
        }
    }
    cfg.validate();
    return cfg;
}

inline ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

/// Shortest text that reads back to the same double.
inline std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

/// Serializes a config in the format accepted by parse_config.
inline std::string format_config(const ScenarioConfig& cfg) {
    std::ostringstream out;
    out << "[scenario]\n"
        << "true_weight = " << format_double(cfg.true_weight.re()) << ", " << format_double(cfg.true_weight.im())
        << "\n"
        << "iterations = " << cfg.iterations << "\n"
        << "trials = " << cfg.trials << "\n"
        << "seed = " << cfg.seed << "\n"
        << "input_std = " << format_double(cfg.input_std) << "\n"
        << "wsnr_cap_db = " << format_double(cfg.wsnr_cap_db) << "\n"
        << "\n[mccc]\n"
        << "kernel_sigma = " << format_double(cfg.kernel_sigma) << "\n"
        << "epsilon = " << format_double(cfg.mccc_epsilon) << "\n"
        << "\n[rls]\n"
        << "lambda = " << format_double(cfg.rls_lambda) << "\n"
        << "p0 = " << format_double(cfg.rls_p0) << "\n"
        << "\n[noise]\n";
    for (const auto& c : cfg.noise.components()) {
        out << "component = " << format_double(c.probability) << ", " << format_double(c.mean) << ", "
            << format_double(c.std) << "\n";
    }
    return out.str();
}

}  // namespace ccorr
