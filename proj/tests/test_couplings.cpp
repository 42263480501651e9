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

#include <gtest/gtest.h>

#include "rscale/couplings.hpp"
#include "rscale/error.hpp"
#include "rscale/numeric_distribution.hpp"
#include "rscale/stats.hpp"

using namespace rscale;

namespace {

template <class T, class Fn>
std::vector<T> replicate(std::uint64_t seed, std::size_t n, Fn&& fn) {
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    RngStream rng(seed, RngStream::derive_stream_id(0x77, r));
    out.push_back(fn(rng));
  }
  return out;
}

template <class T, class F>
std::vector<double> col(const std::vector<T>& v, F f) {
  std::vector<double> out;
  for (const T& x : v) out.push_back(f(x));
  return out;
}

std::function<double(double)> gamma_law(double a) {
  return [a](double x) { return gamma_cdf(a, std::max(0.0, x)); };
}

PermutationOptions perms(std::uint64_t seed) {
  PermutationOptions o;
  o.permutations = 499;
  o.seed = seed;
  return o;
}

std::vector<double> first(const std::vector<double>& v, std::size_t n) { return {v.begin(), v.begin() + n}; }

}  // namespace

TEST(ExponentialTilt, GammaLaplace) {
  // tilt of Gamma(2) at s=1 is Gamma(2, rate 2)
  RngStream r(50);
  std::vector<double> x(50000);
  for (double& v : x) v = sample_exponential_tilt(r, CumulantModel::gamma(2.0), 1.0);
  EXPECT_TRUE(ks_one_sample(x, [](double t) { return gamma_cdf(2.0, 2.0 * std::max(t, 0.0)); }).pass);
}

TEST(ExponentialTilt, SizeBiasedMean) {
  // mean of the size-biased X_{1/2,1} tilted by s=1: psi'(1) with b=1
  RngStream r(51);
  const CumulantModel m = CumulantModel::size_biased_tilted_stable(StableParams(0.5), 1.0);
  std::vector<double> x(50000);
  for (double& v : x) v = sample_exponential_tilt(r, m, 1.0);
  const double target = 0.5 / 2.0 + 0.5 * std::pow(2.0, -0.5);
  EXPECT_TRUE(moment_ci(x, target).pass);
}

TEST(ScalarCoupling, GammaTwoOrderOne) {
  const XiLaw law(CumulantModel::gamma(2.0), 1.0);
  const auto d = replicate<ScalarCoupling>(52, 100000, [&](RngStream& r) { return couple_scalar(r, law); });
  const auto t = col(d, [](const ScalarCoupling& c) { return c.T; });
  const auto xt = col(d, [](const ScalarCoupling& c) { return c.xiT(); });
  EXPECT_TRUE(ks_one_sample(t, [](double v) { return -std::expm1(-std::max(v, 0.0)); }).pass);
  EXPECT_TRUE(ks_one_sample(xt, gamma_law(1.0)).pass);
  EXPECT_TRUE(independence_test(first(t, 2000), first(xt, 2000), perms(52)).pass);
}

TEST(ScalarCoupling, StableHalfOrderHalf) {
  const XiLaw law(CumulantModel::tilted_stable(StableParams(0.5), 0.0), 0.5);
  const NumericDistribution tilted([](double t) { return levy_half_density(t) / std::sqrt(t); });
  const auto d = replicate<ScalarCoupling>(53, 100000, [&](RngStream& r) { return couple_scalar(r, law); });
  EXPECT_TRUE(ks_one_sample(col(d, [](const ScalarCoupling& c) { return c.T; }),
                            [&](double v) { return tilted.cdf(v); })
                  .pass);
  EXPECT_TRUE(ks_one_sample(col(d, [](const ScalarCoupling& c) { return c.xiT(); }), gamma_law(0.5)).pass);
}

TEST(ScalarCoupling, RejectsNonPositiveNu) {
  EXPECT_THROW(XiLaw(CumulantModel::gamma(2.0), 0.0), DomainError);
}

TEST(GgCoupling, ScaledTotalIsGamma) {
  const StableParams p(0.5);
  const auto d = replicate<MeasureCoupling>(54, 10000, [&](RngStream& r) { return couple_gg_measure(r, p, 0.0, 0.5, 1e-3); });
  const auto xt = col(d, [](const MeasureCoupling& c) { return c.xiT(); });
  const auto p1 = col(d, [](const MeasureCoupling& c) { return c.weights.leader(); });
  EXPECT_TRUE(ks_one_sample(xt, gamma_law(0.5)).pass);
  EXPECT_TRUE(independence_test(first(p1, 2000), first(xt, 2000), perms(54)).pass);
  RngStream r(55);
  StickBreakingOptions opt;
  opt.deficit_tolerance = 1e-3;
  std::vector<double> oracle(10000);
  for (double& v : oracle) v = stick_breaking_pd(r, 0.5, 0.5, opt).leader();
  EXPECT_TRUE(ks_two_sample(p1, oracle).pass);
}

TEST(SizeBiased, ScaledTotalIsGamma) {
  const StableParams p(0.5);
  const auto d =
      replicate<MeasureCoupling>(56, 20000, [&](RngStream& r) { return couple_size_biased(r, p, 1.0, 1.5, 1e-3); });
  EXPECT_TRUE(ks_one_sample(col(d, [](const MeasureCoupling& c) { return c.xiT(); }), gamma_law(1.5)).pass);
}

TEST(SizeBiased, OrderOneGivesTiltedStable) {
  const StableParams p(0.5);
  const auto d =
      replicate<MeasureCoupling>(57, 20000, [&](RngStream& r) { return couple_size_biased(r, p, 1.0, 1.0, 1e-3); });
  RngStream r(58);
  std::vector<double> ref(20000);
  for (double& v : ref) v = sample_tilted_stable(r, p, 1.0);
  EXPECT_TRUE(ks_two_sample(col(d, [](const MeasureCoupling& c) { return c.T; }), ref).pass);
}

TEST(RandomScaling, DecouplesToExponential) {
  const auto d = replicate<RandomScalingDraw>(59, 10000, [](RngStream& r) {
    return random_scaling_draw(r, StableParams(0.5), 1.0);
  });
  const auto dec = col(d, [](const RandomScalingDraw& x) { return x.decoupled; });
  const auto sc = col(d, [](const RandomScalingDraw& x) { return x.scaled; });
  EXPECT_TRUE(ks_one_sample(dec, gamma_law(1.0)).pass);
  EXPECT_TRUE(independence_test(first(sc, 2000), first(dec, 2000), perms(59)).pass);
}

TEST(PdBridge, NegativeTheta) {
  const auto d = replicate<PdBridgeDraw>(60, 20000, [](RngStream& r) {
    return couple_pd_bridge(r, StableParams(0.5), -0.25, 1e-3);
  });
  EXPECT_TRUE(ks_one_sample(col(d, [](const PdBridgeDraw& x) { return x.xi_H * x.T; }), gamma_law(0.25)).pass);
}

TEST(PdBridge, LeaderMatchesStickBreaking) {
  const auto d = replicate<PdBridgeDraw>(61, 10000, [](RngStream& r) {
    return couple_pd_bridge(r, StableParams(0.5), 0.5, 1e-3);
  });
  RngStream r(62);
  StickBreakingOptions opt;
  opt.deficit_tolerance = 1e-3;
  std::vector<double> oracle(10000);
  for (double& v : oracle) v = stick_breaking_pd(r, 0.5, 0.5, opt).leader();
  EXPECT_TRUE(ks_two_sample(col(d, [](const PdBridgeDraw& x) { return x.weights.leader(); }), oracle).pass);
}

TEST(XiHMixture, MatchesPair) {
  const auto a = replicate<XiHPair>(63, 20000, [](RngStream& r) { return sample_xi_H_mixture(r, StableParams(0.5), 0.5); });
  const auto b = replicate<XiHPair>(64, 20000, [](RngStream& r) { return sample_xi_H_pair(r, StableParams(0.5), 0.5); });
  EXPECT_TRUE(ks_two_sample(col(a, [](const XiHPair& x) { return x.xi; }), col(b, [](const XiHPair& x) { return x.xi; }))
                  .pass);
}

TEST(StableGamma, TotalIsGamma) {
  const auto d = replicate<StableGammaDraw>(65, 100000, [](RngStream& r) {
    return stable_gamma_draw(r, StableParams(0.5), 1.0);
  });
  EXPECT_TRUE(ks_one_sample(col(d, [](const StableGammaDraw& x) { return x.total; }), gamma_law(1.0)).pass);
  const auto sc = col(d, [](const StableGammaDraw& x) { return x.scaled; });
  const auto tot = col(d, [](const StableGammaDraw& x) { return x.total; });
  EXPECT_TRUE(independence_test(first(sc, 2000), first(tot, 2000), perms(65)).pass);
}

TEST(StableGamma, UnitSplitReproducesScalarDraw) {
  for (std::uint64_t k = 0; k < 100; ++k) {
    RngStream a(66, k);
    RngStream b(66, k);
    const StableGammaDraw x = stable_gamma_draw(a, StableParams(0.5), 1.0);
    const StableGammaDraw y = stable_gamma_path_draw(b, StableParams(0.5), 1.0, 1.0);
    ASSERT_EQ(x.zeta, y.zeta);
    ASSERT_EQ(x.total, y.total);
    ASSERT_EQ(x.scaled, y.scaled);
  }
}

TEST(StableGamma, AlgebraCheckPasses) {
  const auto reports = stable_gamma_algebra_check(67, StableParams(0.5), 1.0, 0.5, 20000);
  ASSERT_EQ(reports.size(), 5u);
  int passed = 0;
  for (const StatReport& r : reports) passed += r.pass ? 1 : 0;
  EXPECT_GE(passed, 4);
}

TEST(Factorization, GammaGrid) {
  std::vector<double> grid;
  for (int i = 0; i < 50; ++i) grid.push_back(0.1 + 4.9 * i / 49.0);
  const FactorizationReport r = factorization_check(CumulantModel::gamma(2.0), 1.0, grid, grid);
  EXPECT_EQ(r.points, 2500u);
  EXPECT_LE(r.max_rel_conditional_vs_marginal, 1e-6);
  EXPECT_LE(r.max_rel_conditional_vs_closed, 1e-6);
}
