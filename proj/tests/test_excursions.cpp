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
#include "rscale/excursions.hpp"
#include "rscale/stats.hpp"

using namespace rscale;

namespace {

LevyDensityModel stable_base(double alpha) {
  return LevyDensityModel::power_law(alpha / std::tgamma(1.0 - alpha), alpha, 0.0);
}

template <class F>
std::vector<double> sample(std::uint64_t seed, std::size_t n, F f) {
  RngStream r(seed, 3);
  std::vector<double> out(n);
  for (double& v : out) v = f(r);
  return out;
}

}  // namespace

TEST(Straddle, GammaProcessDurationDensity) {
  const double expected = (1.0 - std::exp(-1.0)) * std::exp(-1.0) / std::log(2.0);
  EXPECT_NEAR(expected, 0.335447, 1e-4);
  EXPECT_NEAR(straddle_duration_density(LevyDensityModel::gamma_process(), 1.0), expected, 1e-12);
}

TEST(Straddle, DurationIsSum) {
  RngStream r(70);
  const ExcursionSampler s(LevyDensityModel::gamma_process());
  for (int i = 0; i < 1000; ++i) {
    const ExcursionTriple e = s.sample(r);
    ASSERT_EQ(e.duration, e.overshoot + e.undershoot);
    ASSERT_GT(e.overshoot, 0.0);
    ASSERT_GE(e.undershoot, 0.0);
  }
}

TEST(Straddle, UndershootGivenDuration) {
  const auto u = sample(71, 100000, [](RngStream& r) { return split_duration(r, 2.0).undershoot; });
  EXPECT_TRUE(ks_one_sample(u, [](double v) {
                return std::clamp((1.0 - std::exp(-v)) / (1.0 - std::exp(-2.0)), 0.0, 1.0);
              }).pass);
}

TEST(ThreeCase, Tags) {
  const ThreeCaseModel a = three_case_model(0.75, 0.25, 0.0);
  EXPECT_DOUBLE_EQ(a.delta, 0.5);
  EXPECT_EQ(a.tag, LevyCase::InfiniteActivityGG);
  const ThreeCaseModel b = three_case_model(0.5, 0.5, 1.0);
  EXPECT_DOUBLE_EQ(b.delta, 0.0);
  EXPECT_EQ(b.tag, LevyCase::GammaProcess);
  EXPECT_NEAR(b.model.exponent(1.0), 0.5 / std::sqrt(std::numbers::pi) * std::log(2.0), 1e-12);
  const ThreeCaseModel c = three_case_model(0.5, 1.5, 1.0);
  EXPECT_DOUBLE_EQ(c.delta, -1.0);
  EXPECT_EQ(c.tag, LevyCase::CompoundPoisson);
}

TEST(ThreeCase, CompoundPoissonRate) {
  const ThreeCaseModel c = three_case_model(0.5, 1.5, 1.0);
  ASSERT_TRUE(c.model.total_mass().has_value());
  EXPECT_NEAR(*c.model.total_mass(), 0.5 / std::sqrt(std::numbers::pi), 1e-12);
}

TEST(PathOracle, MatchesDirectSampler) {
  const ThreeCaseModel c = three_case_model(0.5, 1.5, 1.0);
  const ExcursionSampler direct(c.model);
  const std::size_t n = 10000;
  RngStream a(72);
  RngStream b(73);
  std::vector<double> d1(n), d2(n), o1(n), o2(n);
  for (std::size_t i = 0; i < n; ++i) {
    const ExcursionTriple x = direct.sample(a);
    const ExcursionTriple y = sample_excursion_path_oracle(b, c.model);
    d1[i] = x.duration;
    d2[i] = y.duration;
    o1[i] = x.overshoot;
    o2[i] = y.overshoot;
    ASSERT_GT(y.overshoot, 0.0);
  }
  EXPECT_TRUE(ks_two_sample(d1, d2).pass);
  EXPECT_TRUE(ks_two_sample(o1, o2).pass);
}

TEST(PathOracle, RequiresFiniteActivity) {
  RngStream r(74);
  EXPECT_ANY_THROW(sample_excursion_path_oracle(r, LevyDensityModel::gamma_process()));
}

TEST(ExcursionCoupling, ScaledDurationIsGamma) {
  const ExcursionCoupler coupler(stable_base(0.5), 1.0, 1.5);
  RngStream r(75);
  std::vector<double> xd(100000), dur(100000);
  for (std::size_t i = 0; i < xd.size(); ++i) {
    const ExcursionCoupling c = coupler.sample(r);
    xd[i] = c.xi_duration();
    dur[i] = c.triple.duration;
    ASSERT_EQ(c.triple.duration, c.triple.overshoot + c.triple.undershoot);
  }
  EXPECT_TRUE(ks_one_sample(xd, [](double v) { return gamma_cdf(1.5, std::max(v, 0.0)); }).pass);
  PermutationOptions opt;
  opt.seed = 75;
  EXPECT_TRUE(independence_test({dur.begin(), dur.begin() + 2000}, {xd.begin(), xd.begin() + 2000}, opt).pass);
}

TEST(ExcursionCoupling, DurationMatchesTiltedBase) {
  const ExcursionCoupler coupler(stable_base(0.5), 1.0, 1.5);
  const ExcursionSampler untilted(stable_base(0.5).tilted(1.0));
  RngStream a(76);
  RngStream b(77);
  std::vector<double> x(20000), y(20000);
  for (double& v : x) v = coupler.sample(a).triple.duration;
  for (double& v : y) v = untilted.sample(b).duration;
  EXPECT_TRUE(ks_two_sample(x, y).pass);
}

TEST(ExcursionCoupling, ScalingDensityHasUnitMass) {
  for (double nu : {0.25, 0.5, 1.5}) {
    const ExcursionCoupler coupler(stable_base(0.5), 1.0, nu);
    EXPECT_NEAR(coupler.xi_mass() / (std::tgamma(nu) * coupler.normalizer()), 1.0, 1e-6) << nu;
  }
}

TEST(PowerLawDuration, ExponentialCase) {
  // delta = -1: density proportional to t^{-1-delta} e^{-ct} (1 - e^{-t}), here c = 1
  const auto x = sample(78, 50000, [](RngStream& r) { return sample_power_law_duration(r, -1.0, 1.0); });
  // density (e^{-t} - e^{-2t}) / (1 - 1/2): CDF 2[(1 - e^{-t}) - (1 - e^{-2t})/2]
  EXPECT_TRUE(ks_one_sample(x, [](double t) {
                t = std::max(t, 0.0);
                return 2.0 * (-std::expm1(-t) + 0.5 * std::expm1(-2.0 * t));
              }).pass);
}
