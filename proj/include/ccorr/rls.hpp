// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>

#include "ccorr/errors.hpp"
#include "ccorr/types.hpp"

namespace ccorr {

inline constexpr double kDefaultRlsLambda = 0.99;
inline constexpr double kDefaultRlsP0 = 1.0;

/// Exponentially weighted RLS state for a single complex tap.
struct RlsState {
    FilterWeight w{};
    double p = kDefaultRlsP0;       ///< inverse input correlation (scalar for one tap)
    double lambda = kDefaultRlsLambda;

    static RlsState make(FilterWeight w0, double p0 = kDefaultRlsP0, double lambda = kDefaultRlsLambda) {
        if (!(p0 > 0.0) || !std::isfinite(p0)) throw DomainError("RLS p0 must be a finite positive number");
        if (!(lambda > 0.0 && lambda <= 1.0)) throw DomainError("RLS forgetting factor must lie in (0, 1]");
        return RlsState{w0, p0, lambda};
    }
};

/// One RLS step: k = p x* / (lambda + |x|^2 p), w += k (d - w x), p = (p - k x p) / lambda.
inline RlsState rls_update(const RlsState& s, ComplexScalar x, ComplexScalar d) {
    const ComplexScalar gain = s.p * std::conj(x) / (s.lambda + std::norm(x) * s.p);
    const ComplexScalar err = d - s.w.value() * x;
    RlsState next = s;
    next.w = FilterWeight(s.w.value() + gain * err);
    // k x is real for a single tap: p |x|^2 / (lambda + |x|^2 p).
    next.p = (s.p - (gain * x).real() * s.p) / s.lambda;
    return next;
}

/// Closed-form least squares: sum d_n x_n* / sum |x_n|^2.
inline FilterWeight least_squares_weight(const PairedDataset& data) {
    ComplexScalar num{0.0, 0.0};
    double den = 0.0;
    for (std::size_t n = 0; n < data.size(); ++n) {
        num += data.desired()[n] * std::conj(data.inputs()[n]);
        den += std::norm(data.inputs()[n]);
    }
    if (!(den > 0.0)) throw UnidentifiableError("least squares: every input sample is zero");
    return FilterWeight(num / den);
}

}  // namespace ccorr
