// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>

#include "ccorr/errors.hpp"
#include "ccorr/kernel.hpp"
#include "ccorr/types.hpp"

namespace ccorr {

namespace detail {

inline void require_same_length(std::size_t a, std::size_t b, const char* op) {
    if (a != b) {
        throw SizeMismatchError(std::string(op) + ": sample sets differ in length (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
    }
}

}  // namespace detail

/// Real correntropy estimate (1/N) sum G_sigma(x_n - y_n).
inline double real_correntropy(const RealSampleSet& xs, const RealSampleSet& ys, KernelBandwidth bw) {
    detail::require_same_length(xs.size(), ys.size(), "real_correntropy");
    double sum = 0.0;
    for (std::size_t n = 0; n < xs.size(); ++n) sum += gaussian_kernel(xs[n] - ys[n], bw);
    return sum / static_cast<double>(xs.size());
}

/// Complex correntropy between paired realizations of C1 and C2.
///
/// Each pair contributes G_{sigma sqrt2}(re residual) * G_{sigma sqrt2}(im residual),
/// i.e. exp(-|c1 - c2|^2 / 4 sigma^2) / (4 pi sigma^2). The result lies in
/// (0, 1/(4 pi sigma^2)] and is symmetric in its two arguments.
inline double complex_correntropy(const ComplexSampleSet& c1, const ComplexSampleSet& c2, KernelBandwidth bw) {
    detail::require_same_length(c1.size(), c2.size(), "complex_correntropy");
    const KernelBandwidth wide = bw.scaled(std::numbers::sqrt2);
    double sum = 0.0;
    for (std::size_t n = 0; n < c1.size(); ++n) {
        const ComplexScalar r = c1[n] - c2[n];
        sum += gaussian_kernel(r.real(), wide) * gaussian_kernel(r.imag(), wide);
    }
    return sum / static_cast<double>(c1.size());
}

/// Upper bound of complex_correntropy, reached iff the sets coincide.
inline double complex_correntropy_peak(KernelBandwidth bw) noexcept {
    return 1.0 / (4.0 * std::numbers::pi * bw.sigma() * bw.sigma());
}

/// Second moment of the gap, (1/N) sum |c1_n - c2_n|^2.
inline double sample_mean_squared_gap(const ComplexSampleSet& c1, const ComplexSampleSet& c2) {
    detail::require_same_length(c1.size(), c2.size(), "sample_mean_squared_gap");
    double sum = 0.0;
    for (std::size_t n = 0; n < c1.size(); ++n) sum += std::norm(c1[n] - c2[n]);
    return sum / static_cast<double>(c1.size());
}

}  // namespace ccorr
