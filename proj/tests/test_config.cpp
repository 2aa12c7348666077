// SPDX-License-Identifier: Apache-2.0

#include <string>

#include <gtest/gtest.h>

#include "ccorr/config.hpp"

using namespace ccorr;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST(ParseConfig, EmptyTextGivesDefaults) {
    const auto cfg = parse_config("");
    EXPECT_EQ(cfg.iterations, 300);
    EXPECT_EQ(cfg.trials, 50);
    EXPECT_EQ(cfg.kernel_sigma, 0.5);
    EXPECT_EQ(cfg.true_weight, FilterWeight(0.8, -0.4));
    EXPECT_EQ(cfg.noise.components().size(), 2u);
}

TEST(ParseConfig, ReadsEveryField) {
    const auto cfg = parse_config(R"(
# leading comment
[scenario]
true_weight = 1.5, -2   # trailing comment
iterations = 40
trials = 3
seed = 18446744073709551615
input_std = 2
wsnr_cap_db = 120

[mccc]
kernel_sigma = 0.75
epsilon = 1e-4

[rls]
lambda = 1
p0 = 50

[noise]
component = 0.9, 0.0, 0.1
component = 0.1, 1.0, 3.0
)");
    EXPECT_EQ(cfg.true_weight, FilterWeight(1.5, -2.0));
    EXPECT_EQ(cfg.iterations, 40);
    EXPECT_EQ(cfg.trials, 3);
    EXPECT_EQ(cfg.seed, 18446744073709551615ull);
    EXPECT_EQ(cfg.input_std, 2.0);
    EXPECT_EQ(cfg.wsnr_cap_db, 120.0);
    EXPECT_EQ(cfg.kernel_sigma, 0.75);
    EXPECT_EQ(cfg.mccc_epsilon, 1e-4);
    EXPECT_EQ(cfg.rls_lambda, 1.0);
    EXPECT_EQ(cfg.rls_p0, 50.0);
    ASSERT_EQ(cfg.noise.components().size(), 2u);
    EXPECT_EQ(cfg.noise.components()[1].mean, 1.0);
    EXPECT_EQ(cfg.noise.components()[1].std, 3.0);
}

TEST(ParseConfig, DiagnosticsNameTheOffendingField) {
    EXPECT_NE(error_of("[scenario]\nstep_size = 1\n").find("scenario.step_size"), std::string::npos);
    EXPECT_NE(error_of("[scenario]\niterations = ten\n").find("scenario.iterations"), std::string::npos);
    EXPECT_NE(error_of("[scenario]\niterations = 0\n").find("scenario.iterations"), std::string::npos);
    EXPECT_NE(error_of("[mccc]\nkernel_sigma = -1\n").find("mccc.kernel_sigma"), std::string::npos);
    EXPECT_NE(error_of("[rls]\nlambda = 2\n").find("rls.lambda"), std::string::npos);
    EXPECT_NE(error_of("[scenario]\ntrue_weight = 1\n").find("scenario.true_weight"), std::string::npos);
    EXPECT_NE(error_of("[noise]\ncomponent = 0.5, 0, 1\n").find("noise"), std::string::npos);
    EXPECT_NE(error_of("[filters]\n").find("filters"), std::string::npos);
    EXPECT_NE(error_of("iterations = 3\n").find("iterations"), std::string::npos);
    EXPECT_NE(error_of("[scenario]\niterations\n").find("line 2"), std::string::npos);
    EXPECT_NE(error_of("[scenario\n").find("line 1"), std::string::npos);
}

TEST(ParseConfig, FormatRoundTrips) {
    ScenarioConfig cfg;
    cfg.true_weight = FilterWeight(0.1, 1.0 / 3.0);
    cfg.kernel_sigma = 0.123456789012345678;
    cfg.noise = NoiseModel({{0.25, -1.0, 0.5}, {0.75, 0.0, 2.0}});
    cfg.seed = 42;
    const auto back = parse_config(format_config(cfg));
    EXPECT_EQ(format_config(back), format_config(cfg));
    EXPECT_EQ(back.true_weight, cfg.true_weight);
    EXPECT_EQ(back.kernel_sigma, cfg.kernel_sigma);
}

TEST(LoadConfig, MissingFileIsAConfigError) {
    EXPECT_THROW(load_config("/nonexistent/scenario.ini"), ConfigError);
}
