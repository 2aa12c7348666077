// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "ccorr/correntropy.hpp"
#include "ccorr/errors.hpp"
#include "ccorr/kernel.hpp"
#include "ccorr/types.hpp"

// Maximum complex correntropy criterion for the single-tap model y = w x.
//
// The cost is the complex correntropy between desired samples d_n and the
// model outputs w x_n. Setting its gradient to zero and isolating w gives a
// weighted least-squares ratio whose weights g1 g2 depend on w itself, which
// is solved by fixed-point iteration (batch) or by accumulating the ratio's
// numerator and denominator sample by sample (recursive).

namespace ccorr {

/// Kernel weights of the real- and imaginary-part residuals of one sample.
struct WeightingFactors {
    double g1;  ///< G_{sigma sqrt2}(Re(d - w x))
    double g2;  ///< G_{sigma sqrt2}(Im(d - w x))

    [[nodiscard]] double product() const noexcept { return g1 * g2; }
};

inline WeightingFactors weighting_factors(FilterWeight w, ComplexScalar x, ComplexScalar d, KernelBandwidth bw) {
    const KernelBandwidth wide = bw.scaled(std::numbers::sqrt2);
    const double err_re = d.real() - (w.re() * x.real() - w.im() * x.imag());
    const double err_im = d.imag() - (w.re() * x.imag() + w.im() * x.real());
    return {gaussian_kernel(err_re, wide), gaussian_kernel(err_im, wide)};
}

/// Model outputs w x_n for every input of the dataset.
inline ComplexSampleSet predicted_outputs(FilterWeight w, const PairedDataset& data) {
    std::vector<ComplexScalar> out;
    out.reserve(data.size());
    for (ComplexScalar x : data.inputs().values()) {
        out.emplace_back(w.re() * x.real() - w.im() * x.imag(), w.re() * x.imag() + w.im() * x.real());
    }
    return ComplexSampleSet(std::move(out));
}

/// MCCC cost: complex correntropy between desired and predicted outputs.
inline double mccc_cost(FilterWeight w, const PairedDataset& data, KernelBandwidth bw) {
    double sum = 0.0;
    for (std::size_t n = 0; n < data.size(); ++n) {
        sum += weighting_factors(w, data.inputs()[n], data.desired()[n], bw).product();
    }
    return sum / static_cast<double>(data.size());
}

struct FixedPointConfig {
    int max_iterations = 100;
    double tolerance = 1e-12;  ///< stop once |w_{k+1} - w_k| < tolerance
    FilterWeight initial_weight{};

    void validate() const {
        if (max_iterations < 1) throw DomainError("fixed-point max_iterations must be >= 1");
        if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
            throw DomainError("fixed-point tolerance must be a finite positive number");
        }
    }
};

struct FixedPointResult {
    FilterWeight weight;
    int iterations = 0;
    bool converged = false;
};

/// One application of the fixed-point map: the g1 g2 weighted least-squares
/// ratio with weights evaluated at `w`.
inline FilterWeight fixed_point_step(FilterWeight w, const PairedDataset& data, KernelBandwidth bw) {
    double num_re = 0.0;
    double num_im = 0.0;
    double den = 0.0;
    for (std::size_t n = 0; n < data.size(); ++n) {
        const ComplexScalar x = data.inputs()[n];
        const ComplexScalar d = data.desired()[n];
        const double g = weighting_factors(w, x, d, bw).product();
        num_re += g * (d.real() * x.real() + d.imag() * x.imag());
        num_im += g * (d.imag() * x.real() - d.real() * x.imag());
        den += g * (x.real() * x.real() + x.imag() * x.imag());
    }
    if (!(den >= std::numeric_limits<double>::min())) {
        throw KernelCollapseError("kernel collapse: every kernel weight underflowed at sigma = " +
                                  std::to_string(bw.sigma()) + "; use a larger kernel size");
    }
    return FilterWeight(num_re / den, num_im / den);
}

/// Batch fixed-point solution of the MCCC stationarity equations.
///
/// Non-convergence within `max_iterations` is reported through the result
/// flag, not thrown.
inline FixedPointResult batch_fixed_point(const PairedDataset& data, KernelBandwidth bw,
                                          const FixedPointConfig& cfg = {}) {
    cfg.validate();
    FixedPointResult result{cfg.initial_weight, 0, false};
    for (int k = 1; k <= cfg.max_iterations; ++k) {
        const FilterWeight next = fixed_point_step(result.weight, data, bw);
        const double step = std::abs(next.value() - result.weight.value());
        result.weight = next;
        result.iterations = k;
        if (step < cfg.tolerance) {
            result.converged = true;
            break;
        }
    }
    return result;
}

inline constexpr double kDefaultRecursiveEpsilon = 1e-6;

struct RecursiveInitConfig {
    FilterWeight initial_weight{};
    double epsilon = kDefaultRecursiveEpsilon;  ///< initial value of the denominator accumulator R
};

/// Accumulators of the stochastic fixed-point recursion.
///
/// Invariants: R >= epsilon > 0 and w = (P + jQ) / R after every update.
class RecursiveState {
public:
    [[nodiscard]] double P() const noexcept { return p_; }
    [[nodiscard]] double Q() const noexcept { return q_; }
    [[nodiscard]] double R() const noexcept { return r_; }
    [[nodiscard]] FilterWeight weight() const noexcept { return w_; }
    [[nodiscard]] std::size_t samples_seen() const noexcept { return seen_; }

    friend RecursiveState recursive_init(const RecursiveInitConfig& cfg);
    friend RecursiveState recursive_update(const RecursiveState& state, ComplexScalar x, ComplexScalar d,
                                           KernelBandwidth bw);

private:
    RecursiveState() = default;

    double p_ = 0.0;
    double q_ = 0.0;
    double r_ = 1.0;
    FilterWeight w_{};
    std::size_t seen_ = 0;
};

inline RecursiveState recursive_init(const RecursiveInitConfig& cfg) {
    if (!(cfg.epsilon > 0.0) || !std::isfinite(cfg.epsilon)) {
        throw DomainError("recursive init epsilon must be a finite positive number");
    }
    RecursiveState s;
    s.p_ = cfg.epsilon * cfg.initial_weight.re();
    s.q_ = cfg.epsilon * cfg.initial_weight.im();
    s.r_ = cfg.epsilon;
    s.w_ = cfg.initial_weight;
    return s;
}

/// Folds one sample into the accumulators. The kernel weights use the weight
/// held by `state`, i.e. the estimate before this sample.
inline RecursiveState recursive_update(const RecursiveState& state, ComplexScalar x, ComplexScalar d,
                                       KernelBandwidth bw) {
    const double g = weighting_factors(state.w_, x, d, bw).product();
    RecursiveState next = state;
    next.p_ += g * (d.real() * x.real() + d.imag() * x.imag());
    next.q_ += g * (d.imag() * x.real() - d.real() * x.imag());
    next.r_ += g * (x.real() * x.real() + x.imag() * x.imag());
    next.w_ = FilterWeight(next.p_ / next.r_, next.q_ / next.r_);
    ++next.seen_;
    return next;
}

}  // namespace ccorr
