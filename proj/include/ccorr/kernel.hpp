// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "ccorr/errors.hpp"
#include "ccorr/types.hpp"

namespace ccorr {

/// Normalized 1-D Gaussian, G_sigma(u) = exp(-u^2 / 2 sigma^2) / (sqrt(2 pi) sigma).
inline double gaussian_kernel(double u, KernelBandwidth bw) noexcept {
    const double s = bw.sigma();
    return std::exp(-(u * u) / (2.0 * s * s)) / (std::sqrt(2.0 * std::numbers::pi) * s);
}

/// N points of a common dimension L >= 1, stored row-major.
class PointCloud {
public:
    PointCloud(std::size_t dimension, std::vector<double> coords) : dim_(dimension), coords_(std::move(coords)) {
        if (dim_ == 0) throw DomainError("point cloud dimension must be at least 1");
        if (coords_.empty()) throw DomainError("point cloud must contain at least one point");
        if (coords_.size() % dim_ != 0) {
            throw SizeMismatchError("point cloud: " + std::to_string(coords_.size()) +
                                    " coordinates is not a multiple of dimension " + std::to_string(dim_));
        }
        for (double c : coords_) {
            if (!std::isfinite(c)) throw DomainError("point cloud coordinates must be finite");
        }
    }

    /// Builds from a list of points, rejecting ragged input.
    static PointCloud from_points(const std::vector<std::vector<double>>& points) {
        if (points.empty()) throw DomainError("point cloud must contain at least one point");
        const std::size_t dim = points.front().size();
        std::vector<double> flat;
        flat.reserve(dim * points.size());
        for (std::size_t n = 0; n < points.size(); ++n) {
            if (points[n].size() != dim) {
                throw SizeMismatchError("point " + std::to_string(n) + " has dimension " +
                                        std::to_string(points[n].size()) + ", expected " + std::to_string(dim));
            }
            flat.insert(flat.end(), points[n].begin(), points[n].end());
        }
        return PointCloud(dim, std::move(flat));
    }

    [[nodiscard]] std::size_t dimension() const noexcept { return dim_; }
    [[nodiscard]] std::size_t size() const noexcept { return coords_.size() / dim_; }
    [[nodiscard]] std::span<const double> point(std::size_t n) const noexcept {
        return std::span<const double>(coords_).subspan(n * dim_, dim_);
    }

private:
    std::size_t dim_;
    std::vector<double> coords_;
};

/// Product-kernel Parzen estimate (1/N) sum_n prod_l G(q_l - x_{n,l}).
inline double parzen_density(const PointCloud& samples, std::span<const double> query, KernelBandwidth bw) {
    if (query.size() != samples.dimension()) {
        throw SizeMismatchError("parzen query has dimension " + std::to_string(query.size()) +
                                ", samples have " + std::to_string(samples.dimension()));
    }
    double sum = 0.0;
    for (std::size_t n = 0; n < samples.size(); ++n) {
        const auto p = samples.point(n);
        double prod = 1.0;
        for (std::size_t l = 0; l < p.size(); ++l) prod *= gaussian_kernel(query[l] - p[l], bw);
        sum += prod;
    }
    return sum / static_cast<double>(samples.size());
}

}  // namespace ccorr
