// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ccorr/errors.hpp"

namespace ccorr {

using ComplexScalar = std::complex<double>;

inline bool is_finite(ComplexScalar c) noexcept {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
}

/// Gaussian kernel size. Always strictly positive and finite.
class KernelBandwidth {
public:
    explicit KernelBandwidth(double sigma) : sigma_(sigma) {
        if (!(sigma > 0.0) || !std::isfinite(sigma)) {
            throw DomainError("kernel bandwidth must be a finite positive number, got " +
                              std::to_string(sigma));
        }
    }

    [[nodiscard]] double sigma() const noexcept { return sigma_; }

    /// Bandwidth scaled by a positive factor (sqrt(2) for complex correntropy).
    [[nodiscard]] KernelBandwidth scaled(double factor) const { return KernelBandwidth(sigma_ * factor); }

    friend bool operator==(const KernelBandwidth&, const KernelBandwidth&) = default;

private:
    double sigma_;
};

namespace detail {

template <class T, class Pred>
std::vector<T> checked_samples(std::vector<T> values, Pred finite, const char* what) {
    if (values.empty()) {
        throw DomainError(std::string(what) + " must contain at least one sample");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!finite(values[i])) {
            throw DomainError(std::string(what) + ": sample " + std::to_string(i) + " is not finite");
        }
    }
    return values;
}

}  // namespace detail

/// Nonempty sequence of finite reals.
class RealSampleSet {
public:
    explicit RealSampleSet(std::vector<double> values)
        : values_(detail::checked_samples(std::move(values), [](double v) { return std::isfinite(v); },
                                          "real sample set")) {}
    RealSampleSet(std::initializer_list<double> values) : RealSampleSet(std::vector<double>(values)) {}

    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const noexcept { return values_[i]; }

private:
    std::vector<double> values_;
};

/// Nonempty sequence of complex samples with finite components.
class ComplexSampleSet {
public:
    explicit ComplexSampleSet(std::vector<ComplexScalar> values)
        : values_(detail::checked_samples(std::move(values), [](ComplexScalar c) { return is_finite(c); },
                                          "complex sample set")) {}
    ComplexSampleSet(std::initializer_list<ComplexScalar> values)
        : ComplexSampleSet(std::vector<ComplexScalar>(values)) {}

    /// Real-valued samples embedded on the real axis.
    static ComplexSampleSet from_real(const RealSampleSet& reals) {
        std::vector<ComplexScalar> out;
        out.reserve(reals.size());
        for (double v : reals.values()) out.emplace_back(v, 0.0);
        return ComplexSampleSet(std::move(out));
    }

    [[nodiscard]] std::span<const ComplexScalar> values() const noexcept { return values_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    ComplexScalar operator[](std::size_t i) const noexcept { return values_[i]; }

private:
    std::vector<ComplexScalar> values_;
};

/// Single complex filter tap.
class FilterWeight {
public:
    FilterWeight() = default;
    FilterWeight(double re, double im) : FilterWeight(ComplexScalar(re, im)) {}
    explicit FilterWeight(ComplexScalar w) : w_(w) {
        if (!is_finite(w)) throw DomainError("filter weight must have finite components");
    }

    [[nodiscard]] ComplexScalar value() const noexcept { return w_; }
    [[nodiscard]] double re() const noexcept { return w_.real(); }
    [[nodiscard]] double im() const noexcept { return w_.imag(); }

    friend bool operator==(const FilterWeight&, const FilterWeight&) = default;

private:
    ComplexScalar w_{0.0, 0.0};
};

/// Aligned input/desired streams for the single-tap model d = w x + noise.
class PairedDataset {
public:
    PairedDataset(ComplexSampleSet inputs, ComplexSampleSet desired)
        : inputs_(std::move(inputs)), desired_(std::move(desired)) {
        if (inputs_.size() != desired_.size()) {
            throw SizeMismatchError("paired dataset: " + std::to_string(inputs_.size()) + " inputs vs " +
                                    std::to_string(desired_.size()) + " desired samples");
        }
        bool any_nonzero = false;
        for (ComplexScalar x : inputs_.values()) any_nonzero = any_nonzero || std::norm(x) > 0.0;
        if (!any_nonzero) throw UnidentifiableError("paired dataset: every input sample is zero");
    }

    [[nodiscard]] const ComplexSampleSet& inputs() const noexcept { return inputs_; }
    [[nodiscard]] const ComplexSampleSet& desired() const noexcept { return desired_; }
    [[nodiscard]] std::size_t size() const noexcept { return inputs_.size(); }

private:
    ComplexSampleSet inputs_;
    ComplexSampleSet desired_;
};

}  // namespace ccorr
