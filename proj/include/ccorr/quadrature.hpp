// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "ccorr/correntropy.hpp"
#include "ccorr/errors.hpp"
#include "ccorr/kernel.hpp"
#include "ccorr/types.hpp"

namespace ccorr {

/// Composite trapezoid rule on [a, b] with `nodes` equispaced nodes (nodes >= 2).
template <class F>
double trapezoid(F&& f, double a, double b, std::size_t nodes) {
    if (nodes < 2) throw QuadratureError("trapezoid rule needs at least 2 nodes");
    const double h = (b - a) / static_cast<double>(nodes - 1);
    double sum = 0.5 * (f(a) + f(b));
    for (std::size_t i = 1; i + 1 < nodes; ++i) sum += f(a + h * static_cast<double>(i));
    return sum * h;
}

/// Tensor-product trapezoid rule over [ax, bx] x [ay, by].
template <class F>
double trapezoid_2d(F&& f, double ax, double bx, double ay, double by, std::size_t nodes) {
    if (nodes < 2) throw QuadratureError("trapezoid rule needs at least 2 nodes");
    const double hx = (bx - ax) / static_cast<double>(nodes - 1);
    const double hy = (by - ay) / static_cast<double>(nodes - 1);
    auto edge = [nodes](std::size_t i) { return (i == 0 || i + 1 == nodes) ? 0.5 : 1.0; };
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes; ++i) {
        const double u = ax + hx * static_cast<double>(i);
        double row = 0.0;
        for (std::size_t j = 0; j < nodes; ++j) {
            row += edge(j) * f(u, ay + hy * static_cast<double>(j));
        }
        sum += edge(i) * row;
    }
    return sum * hx * hy;
}

/// Square integration box and grid density for the correntropy integral.
struct QuadratureSpec {
    ComplexScalar center{0.0, 0.0};  ///< box center (re axis = u1, im axis = u2)
    double half_width = 0.0;
    std::size_t nodes = 257;         ///< per axis
    double convergence_tol = 1e-9;   ///< max relative change when the grid is refined

    /// Box spanning every sample coordinate with `padding_sigmas` kernel widths to spare.
    static QuadratureSpec covering(const ComplexSampleSet& c1, const ComplexSampleSet& c2, KernelBandwidth bw,
                                   double padding_sigmas = 8.0, std::size_t nodes = 257) {
        double lo_re = c1[0].real(), hi_re = lo_re, lo_im = c1[0].imag(), hi_im = lo_im;
        for (const auto* set : {&c1, &c2}) {
            for (ComplexScalar c : set->values()) {
                lo_re = std::min(lo_re, c.real());
                hi_re = std::max(hi_re, c.real());
                lo_im = std::min(lo_im, c.imag());
                hi_im = std::max(hi_im, c.imag());
            }
        }
        QuadratureSpec spec;
        spec.center = {0.5 * (lo_re + hi_re), 0.5 * (lo_im + hi_im)};
        spec.half_width = 0.5 * std::max(hi_re - lo_re, hi_im - lo_im) + padding_sigmas * bw.sigma();
        spec.nodes = nodes;
        return spec;
    }
};

/// Minimum kernel widths of clearance between any sample and the box edge.
inline constexpr double kOracleMinPaddingSigmas = 6.0;

/// Integral value with a relative accuracy bound: the larger of the change
/// under grid refinement and the rounding floor points-per-axis * eps of the
/// fine-grid sum.
struct QuadratureEstimate {
    double value = 0.0;
    double relative_error_bound = 0.0;
};

/// Complex correntropy evaluated from its defining integral.
///
/// Builds the 4-D product-kernel Parzen estimate of (X, Y, Z, S) from the paired
/// samples and integrates it over the plane x = y = u1, z = s = u2 with a
/// tensor trapezoid rule. The grid is refined once (intervals halved); if the
/// two estimates disagree by more than `quad.convergence_tol` the result is
/// rejected.
inline QuadratureEstimate integrate_correntropy(const ComplexSampleSet& c1, const ComplexSampleSet& c2,
                                                KernelBandwidth bw, const QuadratureSpec& quad) {
    detail::require_same_length(c1.size(), c2.size(), "correntropy_integral_oracle");
    if (!(quad.half_width > 0.0) || quad.nodes < 3 || !(quad.convergence_tol > 0.0)) {
        throw QuadratureError("quadrature spec needs half_width > 0, nodes >= 3 and convergence_tol > 0");
    }
    const double pad = kOracleMinPaddingSigmas * bw.sigma();
    const double lo_re = quad.center.real() - quad.half_width, hi_re = quad.center.real() + quad.half_width;
    const double lo_im = quad.center.imag() - quad.half_width, hi_im = quad.center.imag() + quad.half_width;

    std::vector<double> coords;
    coords.reserve(4 * c1.size());
    for (std::size_t n = 0; n < c1.size(); ++n) {
        const std::array<double, 4> p{c1[n].real(), c2[n].real(), c1[n].imag(), c2[n].imag()};
        if (p[0] - pad < lo_re || p[1] - pad < lo_re || p[0] + pad > hi_re || p[1] + pad > hi_re ||
            p[2] - pad < lo_im || p[3] - pad < lo_im || p[2] + pad > hi_im || p[3] + pad > hi_im) {
            throw QuadratureError("integration box does not cover sample " + std::to_string(n) +
                                  " with 6 sigma padding");
        }
        coords.insert(coords.end(), p.begin(), p.end());
    }
    const PointCloud cloud(4, std::move(coords));

    auto integrand = [&](double u1, double u2) {
        const std::array<double, 4> q{u1, u1, u2, u2};
        return parzen_density(cloud, q, bw);
    };
    const std::size_t fine_nodes = 2 * quad.nodes - 1;
    const double coarse = trapezoid_2d(integrand, lo_re, hi_re, lo_im, hi_im, quad.nodes);
    const double fine = trapezoid_2d(integrand, lo_re, hi_re, lo_im, hi_im, fine_nodes);
    const double change = std::abs(fine - coarse) / std::abs(fine);
    if (!(change <= quad.convergence_tol)) {
        throw QuadratureError("quadrature not converged: refining the grid changed the result from " +
                              std::to_string(coarse) + " to " + std::to_string(fine));
    }
    const double rounding = static_cast<double>(fine_nodes) * std::numeric_limits<double>::epsilon();
    return {fine, std::max(change, rounding)};
}

/// Value of integrate_correntropy; throws QuadratureError on a bad box or grid.
inline double correntropy_integral_oracle(const ComplexSampleSet& c1, const ComplexSampleSet& c2,
                                          KernelBandwidth bw, const QuadratureSpec& quad) {
    return integrate_correntropy(c1, c2, bw, quad).value;
}

}  // namespace ccorr
