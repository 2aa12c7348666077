// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ccorr/errors.hpp"
#include "ccorr/mccc.hpp"
#include "ccorr/random.hpp"
#include "ccorr/rls.hpp"
#include "ccorr/types.hpp"

// System-identification benchmark: d_n = wbar x_n + eta_n with impulsive
// Gaussian-mixture noise on both parts of eta_n. The recursive MCCC filter and
// complex RLS are run side by side on the same stream, and the weight SNR of
// each is tracked per sample and averaged over Monte Carlo trials.

namespace ccorr {

struct MixtureComponent {
    double probability = 1.0;
    double mean = 0.0;
    double std = 1.0;  ///< standard deviation; 0 gives a point mass at `mean`
};

/// Gaussian mixture applied independently to the real and imaginary parts.
class NoiseModel {
public:
    explicit NoiseModel(std::vector<MixtureComponent> components) : components_(std::move(components)) {
        if (components_.empty()) throw DomainError("noise model needs at least one component");
        double total = 0.0;
        for (std::size_t i = 0; i < components_.size(); ++i) {
            const auto& c = components_[i];
            if (!(c.probability >= 0.0 && c.probability <= 1.0)) {
                throw DomainError("noise component " + std::to_string(i) + ": probability must lie in [0, 1]");
            }
            if (!std::isfinite(c.mean)) throw DomainError("noise component " + std::to_string(i) + ": mean not finite");
            if (!(c.std >= 0.0) || !std::isfinite(c.std)) {
                throw DomainError("noise component " + std::to_string(i) + ": std must be finite and >= 0");
            }
            total += c.probability;
        }
        if (std::abs(total - 1.0) > 1e-12) {
            throw DomainError("noise component probabilities sum to " + std::to_string(total) + ", expected 1");
        }
    }

    /// 0.95 N(0, 0.05) + 0.05 N(0, 5), second argument a standard deviation.
    static NoiseModel impulsive_default() { return NoiseModel({{0.95, 0.0, 0.05}, {0.05, 0.0, 5.0}}); }
    static NoiseModel none() { return NoiseModel({{1.0, 0.0, 0.0}}); }

    [[nodiscard]] const std::vector<MixtureComponent>& components() const noexcept { return components_; }

    /// Per-part variance sum_k p_k (std_k^2 + mean_k^2) - (sum_k p_k mean_k)^2.
    [[nodiscard]] double part_variance() const noexcept {
        double m1 = 0.0, m2 = 0.0;
        for (const auto& c : components_) {
            m1 += c.probability * c.mean;
            m2 += c.probability * (c.std * c.std + c.mean * c.mean);
        }
        return m2 - m1 * m1;
    }

private:
    std::vector<MixtureComponent> components_;
};

namespace detail {

inline double sample_mixture_part(const NoiseModel& model, Engine& eng) {
    const auto& comps = model.components();
    const double u = uniform01(eng);
    std::size_t pick = comps.size() - 1;
    double acc = 0.0;
    for (std::size_t k = 0; k < comps.size(); ++k) {
        acc += comps[k].probability;
        if (u < acc) {
            pick = k;
            break;
        }
    }
    // Rounding can leave `acc` just under 1; never land on an unreachable component.
    while (comps[pick].probability == 0.0 && pick > 0) --pick;
    return comps[pick].mean + comps[pick].std * standard_normal(eng);
}

}  // namespace detail

/// Complex noise sample; real then imaginary part, each from the mixture.
inline ComplexScalar sample_noise(const NoiseModel& model, Engine& eng) {
    const double re = detail::sample_mixture_part(model, eng);
    const double im = detail::sample_mixture_part(model, eng);
    return {re, im};
}

/// Weight SNR in dB, 10 log10(|wbar|^2 / |wbar - w|^2), capped at `cap_db`.
inline double wsnr_db(FilterWeight true_w, FilterWeight est_w, double cap_db) {
    const double signal = std::norm(true_w.value());
    if (!(signal > 0.0)) throw DomainError("WSNR is undefined for a zero true weight");
    const double error = std::norm(true_w.value() - est_w.value());
    if (error == 0.0) return cap_db;
    return std::min(cap_db, 10.0 * std::log10(signal / error));
}

using WsnrSeries = std::vector<double>;

inline constexpr std::size_t kSteadyStateWindow = 50;

struct ScenarioConfig {
    FilterWeight true_weight{0.8, -0.4};
    int iterations = 300;
    int trials = 50;
    double kernel_sigma = 0.5;
    double mccc_epsilon = kDefaultRecursiveEpsilon;
    double rls_lambda = kDefaultRlsLambda;
    double rls_p0 = kDefaultRlsP0;
    double input_std = 1.0;  ///< total std of the circular Gaussian input
    std::uint64_t seed = 20240601;
    double wsnr_cap_db = 300.0;
    NoiseModel noise = NoiseModel::impulsive_default();

    void validate() const {
        if (iterations < 1) throw ConfigError("scenario.iterations must be >= 1");
        if (trials < 1) throw ConfigError("scenario.trials must be >= 1");
        if (!(kernel_sigma > 0.0) || !std::isfinite(kernel_sigma)) throw ConfigError("mccc.kernel_sigma must be > 0");
        if (!(mccc_epsilon > 0.0) || !std::isfinite(mccc_epsilon)) throw ConfigError("mccc.epsilon must be > 0");
        if (!(rls_lambda > 0.0 && rls_lambda <= 1.0)) throw ConfigError("rls.lambda must lie in (0, 1]");
        if (!(rls_p0 > 0.0) || !std::isfinite(rls_p0)) throw ConfigError("rls.p0 must be > 0");
        if (!(input_std > 0.0) || !std::isfinite(input_std)) throw ConfigError("scenario.input_std must be > 0");
        if (!(std::norm(true_weight.value()) > 0.0)) throw ConfigError("scenario.true_weight must be nonzero");
        if (!std::isfinite(wsnr_cap_db)) throw ConfigError("scenario.wsnr_cap_db must be finite");
    }
};

struct TrialSeries {
    WsnrSeries mccc;
    WsnrSeries rls;
    FilterWeight initial_weight;
    FilterWeight final_mccc;
    FilterWeight final_rls;
};

/// Input/desired stream of one trial plus the shared random initial weight.
struct TrialStream {
    FilterWeight initial_weight;
    std::vector<ComplexScalar> inputs;
    std::vector<ComplexScalar> desired;
};

/// Draw order from the trial generator: initial weight (re, im), then per
/// sample x (re, im) followed by the noise (re, im).
inline TrialStream make_trial_stream(const ScenarioConfig& cfg, std::uint64_t trial_seed) {
    Engine eng(trial_seed);
    const double w0_scale = 1.0 / std::numbers::sqrt2;
    const double w0_re = w0_scale * standard_normal(eng);
    const double w0_im = w0_scale * standard_normal(eng);
    TrialStream stream{FilterWeight(w0_re, w0_im), {}, {}};

    const auto len = static_cast<std::size_t>(cfg.iterations);
    stream.inputs.reserve(len);
    stream.desired.reserve(len);
    const double x_scale = cfg.input_std / std::numbers::sqrt2;
    for (std::size_t n = 0; n < len; ++n) {
        const double x_re = x_scale * standard_normal(eng);
        const double x_im = x_scale * standard_normal(eng);
        const ComplexScalar x(x_re, x_im);
        stream.inputs.push_back(x);
        stream.desired.push_back(cfg.true_weight.value() * x + sample_noise(cfg.noise, eng));
    }
    return stream;
}

/// One identification run: both filters start from the same random weight and
/// consume the identical stream; WSNR is recorded after every update.
inline TrialSeries run_trial(const ScenarioConfig& cfg, std::uint64_t trial_seed) {
    cfg.validate();
    const TrialStream stream = make_trial_stream(cfg, trial_seed);
    const KernelBandwidth bw(cfg.kernel_sigma);
    RecursiveState mccc = recursive_init({stream.initial_weight, cfg.mccc_epsilon});
    RlsState rls = RlsState::make(stream.initial_weight, cfg.rls_p0, cfg.rls_lambda);

    TrialSeries out{{}, {}, stream.initial_weight, stream.initial_weight, stream.initial_weight};
    out.mccc.reserve(stream.inputs.size());
    out.rls.reserve(stream.inputs.size());
    for (std::size_t n = 0; n < stream.inputs.size(); ++n) {
        mccc = recursive_update(mccc, stream.inputs[n], stream.desired[n], bw);
        rls = rls_update(rls, stream.inputs[n], stream.desired[n]);
        out.mccc.push_back(wsnr_db(cfg.true_weight, mccc.weight(), cfg.wsnr_cap_db));
        out.rls.push_back(wsnr_db(cfg.true_weight, rls.w, cfg.wsnr_cap_db));
    }
    out.final_mccc = mccc.weight();
    out.final_rls = rls.w;
    return out;
}

/// Mean of the trailing steady-state window (the whole series if shorter).
inline double steady_state_mean(const WsnrSeries& s) {
    const std::size_t window = std::min(kSteadyStateWindow, s.size());
    double sum = 0.0;
    for (std::size_t i = s.size() - window; i < s.size(); ++i) sum += s[i];
    return window == 0 ? 0.0 : sum / static_cast<double>(window);
}

struct AlgorithmSummary {
    WsnrSeries mean;
    double steady_state_db = 0.0;
};

struct MonteCarloReport {
    ScenarioConfig config;
    std::vector<std::uint64_t> trial_seeds;
    std::vector<TrialSeries> trials;
    AlgorithmSummary mccc;
    AlgorithmSummary rls;

    /// Steady-state WSNR of MCCC minus that of RLS, in dB.
    [[nodiscard]] double steady_state_margin_db() const noexcept {
        return mccc.steady_state_db - rls.steady_state_db;
    }
};

inline std::size_t default_parallelism(int trials) {
    const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    return std::min<std::size_t>(hw, static_cast<std::size_t>(std::max(trials, 1)));
}

/// Runs `cfg.trials` trials (seed i = derive_seed(cfg.seed, i)) on up to
/// `parallelism` threads, then averages in trial order.
inline MonteCarloReport monte_carlo(const ScenarioConfig& cfg, std::size_t parallelism = 1) {
    cfg.validate();
    const auto n_trials = static_cast<std::size_t>(cfg.trials);
    MonteCarloReport report{cfg, {}, std::vector<TrialSeries>(n_trials), {}, {}};
    report.trial_seeds.reserve(n_trials);
    for (std::size_t i = 0; i < n_trials; ++i) report.trial_seeds.push_back(derive_seed(cfg.seed, i));

    const std::size_t workers = std::clamp<std::size_t>(parallelism, 1, n_trials);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto work = [&] {
        for (std::size_t i = next++; i < n_trials; i = next++) {
            try {
                report.trials[i] = run_trial(cfg, report.trial_seeds[i]);
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);

    const auto len = static_cast<std::size_t>(cfg.iterations);
    report.mccc.mean.assign(len, 0.0);
    report.rls.mean.assign(len, 0.0);
    for (const auto& t : report.trials) {
        for (std::size_t k = 0; k < len; ++k) {
            report.mccc.mean[k] += t.mccc[k];
            report.rls.mean[k] += t.rls[k];
        }
    }
    for (std::size_t k = 0; k < len; ++k) {
        report.mccc.mean[k] /= static_cast<double>(n_trials);
        report.rls.mean[k] /= static_cast<double>(n_trials);
    }
    report.mccc.steady_state_db = steady_state_mean(report.mccc.mean);
    report.rls.steady_state_db = steady_state_mean(report.rls.mean);
    return report;
}

}  // namespace ccorr
