// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "ccorr/mccc.hpp"
#include "ccorr/rls.hpp"
#include "test_support.hpp"

using namespace ccorr;
using ccorr::testing::impulsive_data;
using ccorr::testing::noiseless_data;

namespace {

const ComplexScalar kTruth(2.0, 3.0);

// exp(-|d - w x|^2 / 4 sigma^2) / (4 pi sigma^2), written independently of the
// real/imaginary factorization used by the library.
double modulus_weight(ComplexScalar w, ComplexScalar x, ComplexScalar d, double sigma) {
    return std::exp(-std::norm(d - w * x) / (4 * sigma * sigma)) / (4 * std::numbers::pi * sigma * sigma);
}

}  // namespace

TEST(McccCost, PeakOnNoiselessDataAtTrueWeight) {
    std::mt19937 gen(41);
    const auto data = noiseless_data(gen, 25, kTruth);
    EXPECT_NEAR(mccc_cost(FilterWeight(kTruth), data, KernelBandwidth(1.0)), 1.0 / (4 * std::numbers::pi), 1e-14);
    EXPECT_NEAR(mccc_cost(FilterWeight(kTruth), data, KernelBandwidth(0.5)), 1.0 / std::numbers::pi, 1e-14);
    EXPECT_LT(mccc_cost(FilterWeight(2.1, 3.0), data, KernelBandwidth(0.5)), 1.0 / std::numbers::pi);
}

TEST(McccCost, EqualsComplexCorrentropyOfDesiredAndPredicted) {
    std::mt19937 gen(42);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int rep = 0; rep < 10; ++rep) {
        const auto data = impulsive_data(gen, 30, {u(gen), u(gen)});
        const FilterWeight w(u(gen), u(gen));
        const KernelBandwidth bw(0.2 + 0.3 * rep);
        const double via_core = complex_correntropy(data.desired(), predicted_outputs(w, data), bw);
        EXPECT_NEAR(mccc_cost(w, data, bw), via_core, 1e-15 * via_core);
    }
}

TEST(WeightingFactors, ReferenceValues) {
    const double s = 0.7;
    const auto peak = weighting_factors(FilterWeight(1.0, -1.0), {0.5, 0.5}, {1.0, 0.0}, KernelBandwidth(s));
    EXPECT_NEAR(peak.g1, 1.0 / (2 * s * std::sqrt(std::numbers::pi)), 1e-15);
    EXPECT_NEAR(peak.g2, 1.0 / (2 * s * std::sqrt(std::numbers::pi)), 1e-15);

    // w = 0, d = 1: residual (1, 0).
    const auto f = weighting_factors(FilterWeight{}, {1.0, 0.0}, {1.0, 0.0}, KernelBandwidth(0.5));
    EXPECT_NEAR(f.g1, std::exp(-1.0) / std::sqrt(std::numbers::pi), 1e-15);
    EXPECT_NEAR(f.g1, 0.207554, 5e-7);
    EXPECT_NEAR(f.g2, 0.564190, 5e-7);
}

TEST(WeightingFactors, ProductIsTheCostSummand) {
    std::mt19937 gen(43);
    std::normal_distribution<double> nd;
    for (int rep = 0; rep < 20; ++rep) {
        const FilterWeight w(nd(gen), nd(gen));
        const ComplexScalar x(nd(gen), nd(gen));
        const ComplexScalar d(nd(gen), nd(gen));
        const double s = 0.3 + 0.1 * rep;
        const PairedDataset one{ComplexSampleSet{x}, ComplexSampleSet{d}};
        const double g = weighting_factors(w, x, d, KernelBandwidth(s)).product();
        EXPECT_DOUBLE_EQ(g, mccc_cost(w, one, KernelBandwidth(s)));
        EXPECT_NEAR(g, modulus_weight(w.value(), x, d, s), 1e-14 * g + 1e-300);
    }
}

TEST(BatchFixedPoint, RecoversNoiselessWeight) {
    std::mt19937 gen(44);
    for (double s : {0.1, 0.5, 2.0}) {
        const auto data = noiseless_data(gen, 40, kTruth);
        const auto res = batch_fixed_point(data, KernelBandwidth(s));
        EXPECT_TRUE(res.converged);
        EXPECT_LE(res.iterations, 20);
        EXPECT_LT(std::abs(res.weight.value() - kTruth), 1e-10);
    }
}

TEST(BatchFixedPoint, LargeKernelApproachesLeastSquares) {
    std::mt19937 gen(45);
    const auto data = impulsive_data(gen, 200, {0.8, -0.4});
    const auto res = batch_fixed_point(data, KernelBandwidth(100.0));
    EXPECT_TRUE(res.converged);
    EXPECT_LT(std::abs(res.weight.value() - least_squares_weight(data).value()), 1e-3);
}

TEST(BatchFixedPoint, ResultIsALocalMaximumOfTheCost) {
    std::mt19937 gen(46);
    const auto data = impulsive_data(gen, 60, {0.8, -0.4});
    const KernelBandwidth bw(0.5);
    FixedPointConfig cfg;
    cfg.tolerance = 1e-6;
    cfg.initial_weight = least_squares_weight(data);
    const auto res = batch_fixed_point(data, bw, cfg);
    ASSERT_TRUE(res.converged);
    const double best = mccc_cost(res.weight, data, bw);
    const double radius = 10 * cfg.tolerance;
    for (int i = -2; i <= 2; ++i) {
        for (int j = -2; j <= 2; ++j) {
            const FilterWeight w(res.weight.re() + radius * i / 2, res.weight.im() + radius * j / 2);
            EXPECT_GE(best, mccc_cost(w, data, bw) - 1e-15) << i << "," << j;
        }
    }
}

TEST(BatchFixedPoint, ResultIsAFixedPointOfTheUpdateMap) {
    std::mt19937 gen(47);
    const auto data = impulsive_data(gen, 80, {-0.2, 0.9});
    const KernelBandwidth bw(0.8);
    const auto res = batch_fixed_point(data, bw);
    ASSERT_TRUE(res.converged);
    EXPECT_LT(std::abs(fixed_point_step(res.weight, data, bw).value() - res.weight.value()), 1e-12);
}

TEST(BatchFixedPoint, CounterRotatesUnderInputPhaseRotation) {
    std::mt19937 gen(48);
    const auto data = impulsive_data(gen, 100, {0.8, -0.4});
    const KernelBandwidth bw(0.5);
    FixedPointConfig cfg;
    cfg.initial_weight = least_squares_weight(data);
    const auto base = batch_fixed_point(data, bw, cfg);
    ASSERT_TRUE(base.converged);

    for (double theta : {0.3, 1.7, -2.4}) {
        const ComplexScalar rot = std::polar(1.0, theta);
        std::vector<ComplexScalar> xs;
        for (auto x : data.inputs().values()) xs.push_back(rot * x);
        const PairedDataset rotated(ComplexSampleSet(xs), data.desired());
        FixedPointConfig rcfg = cfg;
        rcfg.initial_weight = FilterWeight(cfg.initial_weight.value() * std::conj(rot));
        const auto res = batch_fixed_point(rotated, bw, rcfg);
        EXPECT_LT(std::abs(res.weight.value() - base.weight.value() * std::conj(rot)), 1e-8) << theta;
    }
}

TEST(BatchFixedPoint, ReportsNonConvergence) {
    std::mt19937 gen(49);
    const auto data = impulsive_data(gen, 50, {0.8, -0.4});
    FixedPointConfig cfg;
    cfg.max_iterations = 1;
    cfg.initial_weight = FilterWeight(5.0, 5.0);
    const auto res = batch_fixed_point(data, KernelBandwidth(0.5), cfg);
    EXPECT_FALSE(res.converged);
    EXPECT_EQ(res.iterations, 1);
}

TEST(BatchFixedPoint, KernelCollapseIsAnError) {
    const PairedDataset data{ComplexSampleSet{{1.0, 0.0}, {0.0, 1.0}}, ComplexSampleSet{{1e3, 0.0}, {0.0, -1e3}}};
    EXPECT_THROW(batch_fixed_point(data, KernelBandwidth(1e-3)), KernelCollapseError);
}

TEST(BatchFixedPoint, ValidatesConfig) {
    std::mt19937 gen(50);
    const auto data = noiseless_data(gen, 5, kTruth);
    FixedPointConfig cfg;
    cfg.max_iterations = 0;
    EXPECT_THROW(batch_fixed_point(data, KernelBandwidth(1.0), cfg), DomainError);
    cfg.max_iterations = 10;
    cfg.tolerance = 0.0;
    EXPECT_THROW(batch_fixed_point(data, KernelBandwidth(1.0), cfg), DomainError);
}

TEST(RecursiveInit, ConstructsConsistentState) {
    const auto zero = recursive_init({FilterWeight{}, 1e-3});
    EXPECT_EQ(zero.P(), 0.0);
    EXPECT_EQ(zero.Q(), 0.0);
    EXPECT_EQ(zero.R(), 1e-3);
    EXPECT_EQ(zero.weight(), FilterWeight{});
    EXPECT_EQ(zero.samples_seen(), 0u);

    const auto s = recursive_init({FilterWeight(1.0, 2.0), 1.0});
    EXPECT_EQ(s.P(), 1.0);
    EXPECT_EQ(s.Q(), 2.0);
    EXPECT_EQ(s.R(), 1.0);
    EXPECT_EQ(s.weight(), FilterWeight(1.0, 2.0));

    std::mt19937 gen(51);
    std::normal_distribution<double> nd;
    for (int rep = 0; rep < 20; ++rep) {
        const auto r = recursive_init({FilterWeight(nd(gen), nd(gen)), std::exp(nd(gen))});
        EXPECT_DOUBLE_EQ(r.weight().re(), r.P() / r.R());
        EXPECT_DOUBLE_EQ(r.weight().im(), r.Q() / r.R());
    }
}

TEST(RecursiveInit, RejectsNonPositiveEpsilon) {
    EXPECT_THROW(recursive_init({FilterWeight{}, 0.0}), DomainError);
    EXPECT_THROW(recursive_init({FilterWeight{}, -1.0}), DomainError);
}

TEST(RecursiveUpdate, StaysAtTrueWeightOnNoiselessStream) {
    std::mt19937 gen(52);
    const auto data = noiseless_data(gen, 300, kTruth);
    auto s = recursive_init({FilterWeight(kTruth), 1e-3});
    for (std::size_t n = 0; n < data.size(); ++n) {
        s = recursive_update(s, data.inputs()[n], data.desired()[n], KernelBandwidth(0.5));
        ASSERT_LT(std::abs(s.weight().value() - kTruth), 1e-12) << "sample " << n;
    }
    EXPECT_EQ(s.samples_seen(), 300u);
}

TEST(RecursiveUpdate, ZeroInputLeavesAccumulatorsUnchanged) {
    const auto s = recursive_init({FilterWeight(0.4, -0.1), 0.5});
    const auto next = recursive_update(s, {0.0, 0.0}, {3.0, 1.0}, KernelBandwidth(1.0));
    EXPECT_EQ(next.P(), s.P());
    EXPECT_EQ(next.Q(), s.Q());
    EXPECT_EQ(next.R(), s.R());
    EXPECT_EQ(next.weight(), s.weight());
    EXPECT_EQ(next.samples_seen(), 1u);
}

TEST(RecursiveUpdate, RatioInvariantAndMonotoneDenominator) {
    std::mt19937 gen(53);
    const auto data = impulsive_data(gen, 500, {0.8, -0.4});
    auto s = recursive_init({FilterWeight(-0.5, 0.7), 1e-3});
    for (std::size_t n = 0; n < data.size(); ++n) {
        const auto next = recursive_update(s, data.inputs()[n], data.desired()[n], KernelBandwidth(0.5));
        ASSERT_GE(next.R(), s.R());
        ASSERT_NEAR(next.weight().re() * next.R(), next.P(), 4e-16 * (std::abs(next.P()) + 1e-300));
        ASSERT_NEAR(next.weight().im() * next.R(), next.Q(), 4e-16 * (std::abs(next.Q()) + 1e-300));
        s = next;
    }
}

// Offline re-computation: accumulate sum g d x* and sum g |x|^2 with the
// kernel weight taken at the previous running estimate.
TEST(RecursiveUpdate, MatchesOfflineRunningWeightSums) {
    std::mt19937 gen(54);
    const auto data = impulsive_data(gen, 200, {0.8, -0.4});
    const double sigma = 0.5;
    const double eps = 1e-12;
    const ComplexScalar w0(0.1, 0.1);

    auto s = recursive_init({FilterWeight(w0), eps});
    ComplexScalar num = eps * w0;
    double den = eps;
    ComplexScalar w = w0;
    for (std::size_t n = 0; n < data.size(); ++n) {
        const auto x = data.inputs()[n];
        const auto d = data.desired()[n];
        const double g = modulus_weight(w, x, d, sigma);
        num += g * d * std::conj(x);
        den += g * std::norm(x);
        w = num / den;
        s = recursive_update(s, x, d, KernelBandwidth(sigma));
    }
    EXPECT_LT(std::abs(s.weight().value() - w), 1e-10);
}

TEST(RecursiveUpdate, LargeKernelApproachesLeastSquares) {
    std::mt19937 gen(55);
    const auto data = impulsive_data(gen, 200, {0.8, -0.4});
    auto s = recursive_init({FilterWeight{}, 1e-9});
    for (std::size_t n = 0; n < data.size(); ++n) {
        s = recursive_update(s, data.inputs()[n], data.desired()[n], KernelBandwidth(100.0));
    }
    EXPECT_LT(std::abs(s.weight().value() - least_squares_weight(data).value()), 1e-3);
}
