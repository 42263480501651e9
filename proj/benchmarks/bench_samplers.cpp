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

#include <benchmark/benchmark.h>

#include "rscale/couplings.hpp"
#include "rscale/excursions.hpp"
#include "rscale/measures.hpp"
#include "rscale/samplers.hpp"
#include "rscale/stats.hpp"

namespace {

using namespace rscale;

void BM_Gamma(benchmark::State& st) {
  RngStream rng(1);
  const double a = static_cast<double>(st.range(0)) / 4.0;
  for (auto _ : st) benchmark::DoNotOptimize(sample_gamma(rng, a));
}
BENCHMARK(BM_Gamma)->Arg(1)->Arg(4)->Arg(16);

void BM_PositiveStable(benchmark::State& st) {
  RngStream rng(2);
  for (auto _ : st) benchmark::DoNotOptimize(sample_pos_stable(rng, StableParams(0.5)));
}
BENCHMARK(BM_PositiveStable);

void BM_TiltedStable(benchmark::State& st) {
  RngStream rng(3);
  const double b = static_cast<double>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(sample_tilted_stable(rng, StableParams(0.5), b));
}
BENCHMARK(BM_TiltedStable)->Arg(0)->Arg(1)->Arg(4)->Arg(100);

void BM_XiTilted(benchmark::State& st) {
  RngStream rng(4);
  for (auto _ : st) benchmark::DoNotOptimize(sample_xi_tilted(rng, StableParams(0.5), 1.0, 0.5));
}
BENCHMARK(BM_XiTilted);

void BM_GgMeasure(benchmark::State& st) {
  RngStream rng(5);
  const double tol = std::pow(10.0, -static_cast<double>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(sample_gg_measure(rng, StableParams(0.5), 0.0, tol).total_mass);
}
BENCHMARK(BM_GgMeasure)->Arg(3)->Arg(6)->Unit(benchmark::kMicrosecond);

void BM_StickBreaking(benchmark::State& st) {
  RngStream rng(6);
  StickBreakingOptions opt;
  opt.deficit_tolerance = 1e-3;
  for (auto _ : st) benchmark::DoNotOptimize(stick_breaking_pd(rng, 0.5, 0.5, opt).leader());
}
BENCHMARK(BM_StickBreaking)->Unit(benchmark::kMicrosecond);

void BM_Crp(benchmark::State& st) {
  RngStream rng(7);
  for (auto _ : st) benchmark::DoNotOptimize(crp_partition(rng, 0.5, 0.0, 10000).blocks());
}
BENCHMARK(BM_Crp)->Unit(benchmark::kMicrosecond);

void BM_ExcursionCoupling(benchmark::State& st) {
  const ExcursionCoupler coupler(LevyDensityModel::power_law(0.5 / std::tgamma(0.5), 0.5, 0.0), 1.0, 1.5);
  RngStream rng(8);
  for (auto _ : st) benchmark::DoNotOptimize(coupler.sample(rng).xi);
}
BENCHMARK(BM_ExcursionCoupling);

void BM_IndependenceTest(benchmark::State& st) {
  RngStream rng(9);
  std::vector<double> x(2000), y(2000);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = rng.normal();
    y[i] = rng.normal();
  }
  PermutationOptions opt;
  opt.permutations = 199;
  for (auto _ : st) benchmark::DoNotOptimize(independence_test(x, y, opt).statistic);
}
BENCHMARK(BM_IndependenceTest)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
