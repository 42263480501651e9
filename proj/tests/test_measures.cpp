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
#include <numeric>

#include <gtest/gtest.h>

#include "rscale/error.hpp"
#include "rscale/measures.hpp"
#include "rscale/numeric_distribution.hpp"
#include "rscale/samplers.hpp"
#include "rscale/stats.hpp"
#include "test_util.hpp"

using namespace rscale;
using rscale::testing::draws;

TEST(GgMeasure, TotalMassIsTiltedStable) {
  const StableParams p(0.5);
  const std::size_t n = 20000;
  const auto m = draws(31, n, [&](RngStream& r) { return sample_gg_measure(r, p, 1.0, 1e-3).total_mass; });
  const auto x = draws(32, n, [&](RngStream& r) { return sample_tilted_stable(r, p, 1.0); });
  EXPECT_TRUE(ks_two_sample(m, x).pass);
}

TEST(GgMeasure, JumpsStrictlyDecreasing) {
  RngStream r(33);
  for (double b : {0.0, 1.0, 5.0}) {
    const JumpMeasure m = sample_gg_measure(r, StableParams(0.5), b);
    ASSERT_GT(m.jumps.size(), 1u);
    for (std::size_t i = 1; i < m.jumps.size(); ++i) ASSERT_LT(m.jumps[i].size, m.jumps[i - 1].size);
    for (const Jump& j : m.jumps) {
      ASSERT_GE(j.location, 0.0);
      ASSERT_LE(j.location, 1.0);
    }
  }
}

TEST(GgMeasure, TruncationBound) {
  RngStream r(34);
  for (int i = 0; i < 20; ++i) {
    const JumpMeasure m = sample_gg_measure(r, StableParams(0.5), 1.0, 1e-6);
    ASSERT_LE(m.tail_bound / m.total_mass, 1e-6);
  }
}

TEST(GgMeasure, Reproducible) {
  RngStream a(35, 2);
  RngStream b(35, 2);
  const JumpMeasure x = sample_gg_measure(a, StableParams(0.6), 0.5, 1e-3);
  const JumpMeasure y = sample_gg_measure(b, StableParams(0.6), 0.5, 1e-3);
  ASSERT_EQ(x.jumps.size(), y.jumps.size());
  EXPECT_EQ(x.total_mass, y.total_mass);
}

TEST(Bridge, MeanTotalMass) {
  const auto m = draws(36, 50000, [](RngStream& r) { return bridge_measure(r, StableParams(0.5), 1.0, 1e-3).total_mass; });
  EXPECT_TRUE(moment_ci(m, 1.0).pass);
}

TEST(Bridge, TotalMassMatchesSizeBiasedDensity) {
  // size-biased X_{1/2,1}: density proportional to t e^{-t} f_{1/2}(t)
  const NumericDistribution g([](double t) { return t * std::exp(-t) * levy_half_density(t); });
  const auto m = draws(37, 20000, [](RngStream& r) { return bridge_measure(r, StableParams(0.5), 1.0, 1e-3).total_mass; });
  EXPECT_TRUE(ks_one_sample(m, [&](double t) { return g.cdf(t); }).pass);
}

TEST(Bridge, LocationsUniform) {
  RngStream r(38);
  std::vector<double> loc;
  for (int i = 0; i < 200; ++i) {
    const JumpMeasure m = bridge_measure(r, StableParams(0.5), 1.0, 1e-3);
    for (std::size_t k = 0; k < std::min<std::size_t>(5, m.jumps.size()); ++k) loc.push_back(m.jumps[k].location);
  }
  EXPECT_TRUE(ks_one_sample(loc, [](double u) { return std::clamp(u, 0.0, 1.0); }).pass);
}

TEST(Normalize, SimpleMeasure) {
  JumpMeasure m;
  m.jumps = {{3.0, 0.2}, {1.0, 0.7}};
  m.total_mass = 4.0;
  const RankedWeights w = normalize(m);
  ASSERT_EQ(w.p.size(), 2u);
  EXPECT_DOUBLE_EQ(w.p[0], 0.75);
  EXPECT_DOUBLE_EQ(w.p[1], 0.25);
  EXPECT_EQ(w.deficit, 0.0);
}

TEST(Normalize, MassBalance) {
  RngStream r(39);
  for (int i = 0; i < 20; ++i) {
    const RankedWeights w = normalize(sample_gg_measure(r, StableParams(0.4), 0.3, 1e-4));
    const double s = std::accumulate(w.p.begin(), w.p.end(), 0.0) + w.deficit;
    ASSERT_NEAR(s, 1.0, 1e-12);
  }
}

TEST(StickBreaking, DirichletLeaderMean) {
  // E[P1] of PD(0, 1) is the Golomb-Dickman constant.
  StickBreakingOptions opt;
  opt.min_sticks = 200;
  opt.deficit_tolerance = 1e-4;
  const auto x = draws(40, 10000, [&](RngStream& r) { return stick_breaking_pd(r, 0.0, 1.0, opt).leader(); });
  const double golomb_dickman = 0.62432998854355087;
  EXPECT_NEAR(std::accumulate(x.begin(), x.end(), 0.0) / x.size(), golomb_dickman, 0.01);
  EXPECT_TRUE(moment_ci(x, golomb_dickman).pass);
}

TEST(StickBreaking, DeficitTolerance) {
  RngStream r(41);
  const RankedWeights w = stick_breaking_pd(r, 0.5, 0.0);
  EXPECT_LE(w.deficit, 1e-6);
  EXPECT_GE(w.p.size(), 1000u);
  EXPECT_GT(w.leader(), w.deficit);
  EXPECT_NEAR(std::accumulate(w.p.begin(), w.p.end(), 0.0) + w.deficit, 1.0, 1e-10);
}

TEST(StickBreaking, RejectsBadTheta) {
  RngStream r(42);
  EXPECT_THROW(stick_breaking_pd(r, 0.5, -0.5), DomainError);
}

TEST(Crp, HarmonicBlockCount) {
  const std::size_t n = 1000;
  const auto k = draws(43, 20000, [&](RngStream& r) { return static_cast<double>(crp_partition(r, 0.0, 1.0, n).blocks()); });
  double harmonic = 0.0;
  for (std::size_t m = 0; m < n; ++m) harmonic += 1.0 / (1.0 + static_cast<double>(m));
  EXPECT_TRUE(moment_ci(k, harmonic).pass);
}

TEST(Crp, SingleCustomer) {
  RngStream r(44);
  for (int i = 0; i < 100; ++i) ASSERT_EQ(crp_partition(r, 0.5, 1.0, 1).blocks(), 1u);
}

TEST(Crp, BlockSizesSumToN) {
  RngStream r(45);
  const PartitionState s = crp_partition(r, 0.5, 0.0, 10000);
  EXPECT_EQ(std::accumulate(s.block_sizes.begin(), s.block_sizes.end(), std::size_t{0}), 10000u);
}

TEST(Crp, DiversitySpread) {
  const auto d = draws(46, 200, [](RngStream& r) { return diversity_estimate(crp_partition(r, 0.5, 0.0, 10000), 0.5); });
  const double mean = std::accumulate(d.begin(), d.end(), 0.0) / d.size();
  double var = 0.0;
  for (double v : d) var += (v - mean) * (v - mean);
  var /= d.size() - 1;
  EXPECT_GT(var, 0.01);
  EXPECT_TRUE(std::isfinite(var));
}

TEST(Diversity, Arithmetic) {
  PartitionState s;
  s.n = 100;
  s.block_sizes.assign(10, 10);
  EXPECT_DOUBLE_EQ(diversity_estimate(s, 0.5), 1.0);
  PartitionState all;
  all.n = 64;
  all.block_sizes.assign(64, 1);
  EXPECT_DOUBLE_EQ(diversity_estimate(all, 0.5), std::pow(64.0, 0.5));
}
