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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rscale {

enum class TestKind { KS1, KS2, DistCorrPerm, MomentCI, Chi2Binned, NumericTolerance };
std::string to_string(TestKind t);

/// Outcome of one statistical test.
struct StatReport {
  TestKind test = TestKind::KS1;
  /// Free-form label of the property under test.
  std::string claim;
  double statistic = 0.0;
  double threshold = 0.0;
  std::optional<double> p_value;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  bool pass = false;
  /// Extra diagnostics (kurtosis, sample means, ...).
  std::string note;
};

inline constexpr double kDefaultLevel = 0.01;
inline constexpr std::size_t kMinKsSample = 50;

/// Asymptotic Kolmogorov critical value sqrt(-log(level / 2) / 2); 1.628 at 1%.
double ks_critical_value(double level);

/// Asymptotic Kolmogorov tail P(sqrt(n) D > lambda).
double kolmogorov_tail(double lambda);

/// One-sample KS test of `x` against `cdf`. Pass iff D < c(level) / sqrt(n).
/// Throws DomainError for n < 50 or a cdf that decreases or leaves [0, 1] on
/// the sorted sample.
StatReport ks_one_sample(std::vector<double> x, const std::function<double(double)>& cdf,
                         double level = kDefaultLevel);

/// Two-sample KS test. Pass iff D < c(level) sqrt((n + m) / (n m)).
StatReport ks_two_sample(std::vector<double> x, std::vector<double> y, double level = kDefaultLevel);

struct PermutationOptions {
  std::size_t permutations = 499;
  std::uint64_t seed = 0;
  /// Worker threads (0 = all available). The p-value does not depend on it.
  unsigned workers = 1;
};

inline constexpr std::size_t kMinDcorSample = 200;
inline constexpr std::size_t kMaxDcorSample = 10000;

/// Empirical distance correlation of the rank transforms of x and y.
double rank_distance_correlation(const std::vector<double>& x, const std::vector<double>& y);

/// Distance-correlation permutation test of independence on ranks.
/// p = (1 + #{permuted >= observed}) / (permutations + 1); pass iff p > level.
/// Requires 200 <= n <= 10^4 and at least 199 permutations.
StatReport independence_test(const std::vector<double>& x, const std::vector<double>& y,
                             const PermutationOptions& options = {}, double level = kDefaultLevel);

/// Pass iff |mean(fn(x)) - target| <= 3 standard errors. Reports the sample
/// kurtosis in `note`. Zero variance degenerates to an exact comparison;
/// a non-finite variance throws DomainError.
StatReport moment_ci(const std::vector<double>& x, double target,
                     const std::function<double(double)>& fn = {});

/// Summary of the same check repeated over several seeds.
struct MajorityVerdict {
  std::size_t passed = 0;
  std::size_t runs = 0;
  /// At least two thirds of the runs passed (2 of 3 for three seeds).
  bool pass() const noexcept { return runs > 0 && 3 * passed >= 2 * runs; }
};
MajorityVerdict majority(const std::vector<StatReport>& runs);

/// Empirical false-positive rate of a test on data drawn from its null.
struct CalibrationResult {
  TestKind test;
  std::size_t runs = 0;
  std::size_t rejections = 0;
  double rate() const noexcept { return runs == 0 ? 0.0 : static_cast<double>(rejections) / runs; }
  /// Upper end of the binomial 99% band for nominal 1% over 200 runs.
  bool within_band(double upper = 0.04) const noexcept { return rate() <= upper; }
};

/// Runs `runs` seeded null experiments of the given test at `level`.
/// KS1: uniform sample (n = 1000) vs the identity CDF; KS2: two uniform
/// samples (n = 1000 each); DistCorrPerm: independent Exp(1) pairs (n = 200,
/// 199 permutations); MomentCI: Exp(1) mean vs 1 (n = 1000).
CalibrationResult null_calibration(TestKind test, std::size_t runs, std::uint64_t seed,
                                   double level = kDefaultLevel, unsigned workers = 1);

}  // namespace rscale
