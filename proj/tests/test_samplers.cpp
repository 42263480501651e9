// Copyright 2026 The rscale Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "rscale/error.hpp"
#include "rscale/samplers.hpp"
#include "rscale/stats.hpp"
#include "test_util.hpp"

using namespace rscale;
using rscale::testing::draws;

namespace {
constexpr std::size_t kN = 100000;
}

TEST(Gamma, Deterministic) {
  RngStream a(5, 1);
  RngStream b(5, 1);
  EXPECT_EQ(sample_gamma(a, 1.0), sample_gamma(b, 1.0));
}

TEST(Gamma, MeanShapeTwo) {
  const auto x = draws(11, kN, [](RngStream& r) { return sample_gamma(r, 2.0); });
  EXPECT_TRUE(moment_ci(x, 2.0).pass);
}

TEST(Gamma, SmallShapeKs) {
  const auto x = draws(12, kN, [](RngStream& r) { return sample_gamma(r, 0.25); });
  const StatReport r = ks_one_sample(x, [](double v) { return gamma_cdf(0.25, v); });
  EXPECT_TRUE(r.pass) << r.statistic;
  EXPECT_LT(r.statistic, 1.63 / std::sqrt(static_cast<double>(kN)));
}

TEST(Beta, UniformCase) {
  const auto x = draws(13, kN, [](RngStream& r) { return sample_beta(r, 1.0, 1.0); });
  EXPECT_TRUE(ks_one_sample(x, [](double v) { return std::clamp(v, 0.0, 1.0); }).pass);
}

TEST(Beta, Mean) {
  const auto x = draws(14, kN, [](RngStream& r) { return sample_beta(r, 2.0, 3.0); });
  EXPECT_TRUE(moment_ci(x, 0.4).pass);
}

TEST(Beta, StrictlyInside) {
  RngStream r(15);
  for (int i = 0; i < 100000; ++i) {
    const double v = sample_beta(r, 0.5, 0.25);
    ASSERT_GT(v, 0.0);
    ASSERT_LT(v, 1.0);
  }
}

TEST(PositiveStable, HalfMatchesLevyCdf) {
  const auto x = draws(16, kN, [](RngStream& r) { return sample_pos_stable(r, StableParams(0.5)); });
  EXPECT_TRUE(ks_one_sample(x, levy_half_cdf).pass);
  EXPECT_TRUE(moment_ci(x, 2.0 / std::sqrt(std::numbers::pi), [](double t) { return 1.0 / std::sqrt(t); }).pass);
}

TEST(PositiveStable, Reproducible) {
  RngStream a(17, 2);
  RngStream b(17, 2);
  EXPECT_EQ(sample_pos_stable(a, StableParams(0.3)), sample_pos_stable(b, StableParams(0.3)));
}

TEST(TiltedStable, NoTiltIsPositiveStable) {
  const auto x = draws(18, 20000, [](RngStream& r) { return sample_tilted_stable(r, StableParams(0.5), 0.0); });
  EXPECT_TRUE(ks_one_sample(x, levy_half_cdf).pass);
}

TEST(TiltedStable, LaplaceTransform) {
  const auto x = draws(19, kN, [](RngStream& r) { return sample_tilted_stable(r, StableParams(0.5), 1.0); });
  const double target = std::exp(-(std::sqrt(2.0) - 1.0));
  EXPECT_TRUE(moment_ci(x, target, [](double t) { return std::exp(-t); }).pass);
}

TEST(TiltedStable, AcceptanceRateAtLargeTilt) {
  RngStream r(20);
  RejectionStats st;
  for (int i = 0; i < 10000; ++i) sample_tilted_stable(r, StableParams(0.5), 4.0, &st);
  EXPECT_GE(st.acceptance_rate(), std::exp(-2.0));
}

TEST(TiltedStable, SubordinatorScaling) {
  RngStream r(21);
  EXPECT_EQ(sample_tilted_subordinator(r, StableParams(0.5), 1.0, 0.0), 0.0);
  // tau(t) for the gg subordinator is t^{1/alpha} X_{alpha, b t^{1/alpha}}; Laplace at s=1, t=2.
  const auto x = draws(22, kN, [](RngStream& g) { return sample_tilted_subordinator(g, StableParams(0.5), 1.0, 2.0); });
  const double target = std::exp(-2.0 * (std::sqrt(2.0) - 1.0));
  EXPECT_TRUE(moment_ci(x, target, [](double t) { return std::exp(-t); }).pass);
}

TEST(Xi, StableOrderOneRootIsGammaTwo) {
  // density of xi is e^{-sqrt(s)} / 2, so sqrt(xi) ~ Gamma(2)
  const XiLaw law(CumulantModel::tilted_stable(StableParams(0.5), 0.0), 1.0);
  const auto x = draws(23, kN, [&](RngStream& r) { return std::sqrt(sample_xi(r, law)); });
  EXPECT_TRUE(ks_one_sample(x, [](double v) { return gamma_cdf(2.0, v); }).pass);
}

TEST(Xi, GammaTwoOrderOne) {
  const XiLaw law(CumulantModel::gamma(2.0), 1.0);
  const auto x = draws(24, kN, [&](RngStream& r) { return sample_xi(r, law); });
  EXPECT_TRUE(ks_one_sample(x, [](double s) { return s / (1.0 + s); }).pass);
  for (double v : x) ASSERT_GT(v, 0.0);
}

TEST(Xi, DensityIntegratesToOne) {
  const XiLaw law(CumulantModel::tilted_stable(StableParams(0.5), 1.0), 0.5);
  // trapezoid on a log grid is enough for a sanity check
  double total = 0.0;
  double prev_s = 0.0;
  double prev_f = 0.0;
  for (int i = 0; i <= 200000; ++i) {
    const double s = std::exp(-30.0 + 50.0 * i / 200000.0);
    const double f = law.density(s);
    if (i > 0) total += 0.5 * (f + prev_f) * (s - prev_s);
    prev_s = s;
    prev_f = f;
  }
  EXPECT_NEAR(total, 1.0, 1e-3);
}

TEST(Xi, GenericNumericMatchesGamma) {
  const CumulantModel m =
      CumulantModel::tabulate([](double s) { return 2.0 * std::log1p(s); }, [](double t) { return t * std::exp(-t); });
  const XiLaw law(m, 1.0);
  const auto x = draws(25, 20000, [&](RngStream& r) { return sample_xi(r, law); });
  EXPECT_TRUE(ks_one_sample(x, [](double s) { return s / (1.0 + s); }).pass);
}

TEST(H, Mean) {
  const auto x = draws(26, kN, [](RngStream& r) { return sample_H(r, StableParams(0.5), 0.5); });
  EXPECT_TRUE(moment_ci(x, 2.0).pass);
}

TEST(H, DomainEdge) {
  RngStream r(27);
  for (int i = 0; i < 1000; ++i) ASSERT_GT(sample_H(r, StableParams(0.5), -0.25), 0.0);
  EXPECT_THROW(sample_H(r, StableParams(0.5), -0.5), DomainError);
}

TEST(XiHPair, GammaPower) {
  const StableParams p(0.5);
  const auto x = draws(28, kN, [&](RngStream& r) {
    const XiHPair d = sample_xi_H_pair(r, p, 0.5);
    EXPECT_GT(d.xi, 0.0);
    EXPECT_GT(d.H, 0.0);
    return std::pow(d.xi + d.H, 0.5);
  });
  EXPECT_TRUE(ks_one_sample(x, [](double v) { return gamma_cdf(2.0, v); }).pass);
}

TEST(XiHPair, BetaRatio) {
  const StableParams p(0.5);
  const auto x = draws(29, kN, [&](RngStream& r) {
    const XiHPair d = sample_xi_H_pair(r, p, 0.5);
    return d.xi / (d.xi + d.H);
  });
  EXPECT_TRUE(ks_one_sample(x, [](double v) { return beta_cdf(1.0, 0.5, std::clamp(v, 0.0, 1.0)); }).pass);
}
