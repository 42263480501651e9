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


#include "rscale/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "rscale/error.hpp"
#include "rscale/parallel.hpp"
#include "rscale/rng.hpp"

namespace rscale {

std::string to_string(TestKind t) {
  switch (t) {
    case TestKind::KS1: return "KS1";
    case TestKind::KS2: return "KS2";
    case TestKind::DistCorrPerm: return "DistCorrPerm";
    case TestKind::MomentCI: return "MomentCI";
    case TestKind::Chi2Binned: return "Chi2Binned";
    case TestKind::NumericTolerance: return "NumericTolerance";
  }
  return "unknown";
}

double ks_critical_value(double level) {
  detail::require(level > 0.0 && level < 1.0, "level must lie in (0, 1)");
  return std::sqrt(-0.5 * std::log(0.5 * level));
}

double kolmogorov_tail(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 0.2) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1) ? term : -term;
    if (term < 1e-17) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

StatReport ks_one_sample(std::vector<double> x, const std::function<double(double)>& cdf,
                         double level) {
  const std::size_t n = x.size();
  if (n < kMinKsSample) detail::domain_fail("KS test needs at least 50 samples");
  std::sort(x.begin(), x.end());
  const double dn = static_cast<double>(n);
  double d = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = cdf(x[i]);
    if (!(f >= -1e-12 && f <= 1.0 + 1e-12)) detail::domain_fail("cdf value outside [0, 1]");
    if (f < prev - 1e-12) detail::domain_fail("cdf is not monotone on the sample");
    prev = f;
    d = std::max({d, f - static_cast<double>(i) / dn, static_cast<double>(i + 1) / dn - f});
  }
  StatReport r;
  r.test = TestKind::KS1;
  r.statistic = d;
  r.threshold = ks_critical_value(level) / std::sqrt(dn);
  r.p_value = kolmogorov_tail(std::sqrt(dn) * d);
  r.n = n;
  r.pass = d < r.threshold;
  return r;
}

StatReport ks_two_sample(std::vector<double> x, std::vector<double> y, double level) {
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  if (n < kMinKsSample || m < kMinKsSample) detail::domain_fail("KS test needs at least 50 samples per side");
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < n && j < m) {
    const double v = std::min(x[i], y[j]);
    while (i < n && x[i] == v) ++i;
    while (j < m && y[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / n - static_cast<double>(j) / m));
  }
  const double scale = std::sqrt(static_cast<double>(n + m) / (static_cast<double>(n) * m));
  StatReport r;
  r.test = TestKind::KS2;
  r.statistic = d;
  r.threshold = ks_critical_value(level) * scale;
  r.p_value = kolmogorov_tail(d / scale);
  r.n = std::min(n, m);
  r.pass = d < r.threshold;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

// Average ranks (1-based), ties share the mean rank.
std::vector<double> average_ranks(const std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
    const double mean_rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) r[idx[k]] = mean_rank;
    i = j + 1;
  }
  return r;
}

// Row sums of |v_i - v_j|.
std::vector<double> distance_row_sums(const std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  const double total = std::accumulate(v.begin(), v.end(), 0.0);
  std::vector<double> out(n);
  double below = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double x = v[idx[k]];
    const double above = total - below - x;
    out[idx[k]] = x * static_cast<double>(k) - below + above - x * static_cast<double>(n - k - 1);
    below += x;
  }
  return out;
}

// n^2 times the squared distance variance.
double distance_variance(const std::vector<double>& v, const std::vector<double>& rows) {
  const double n = static_cast<double>(v.size());
  double s1 = 0.0;
  double s2 = 0.0;
  for (double x : v) {
    s1 += x;
    s2 += x * x;
  }
  const double sum_sq = 2.0 * n * s2 - 2.0 * s1 * s1;  // sum_ij (v_i - v_j)^2
  double rows_sq = 0.0;
  double total = 0.0;
  for (double r : rows) {
    rows_sq += r * r;
    total += r;
  }
  return sum_sq - 2.0 / n * rows_sq + total * total / (n * n);
}

// Data laid out for repeated distance covariances against permuted y.
struct DcovKernel {
  std::vector<double> xs;      // x ranks, ascending
  std::vector<double> ys;      // y ranks aligned with xs
  std::vector<double> x_rows;  // row sums for xs
  std::vector<double> y_rows;  // row sums for ys
  double x_total = 0.0;
  double y_total = 0.0;
  double x_var = 0.0;
  double y_var = 0.0;

  DcovKernel(const std::vector<double>& x, const std::vector<double>& y) {
    const std::vector<double> rx = average_ranks(x);
    const std::vector<double> ry = average_ranks(y);
    const std::size_t n = x.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return rx[a] < rx[b]; });
    for (std::size_t k : idx) {
      xs.push_back(rx[k]);
      ys.push_back(ry[k]);
    }
    x_rows = distance_row_sums(xs);
    y_rows = distance_row_sums(ys);
    x_total = std::accumulate(x_rows.begin(), x_rows.end(), 0.0);
    y_total = std::accumulate(y_rows.begin(), y_rows.end(), 0.0);
    x_var = distance_variance(xs, x_rows);
    y_var = distance_variance(ys, y_rows);
  }

  // n^2 dCov^2 between xs and ys[perm] (identity when perm is empty).
  double dcov(const std::vector<std::size_t>& perm) const {
    const std::size_t n = xs.size();
    std::vector<double> yp(n);
    std::vector<double> yr(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t k = perm.empty() ? i : perm[i];
      yp[i] = ys[k];
      yr[i] = y_rows[k];
    }
    double cross = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double xi = xs[i];
      const double yi = yp[i];
      double acc = 0.0;
      for (std::size_t j = i + 1; j < n; ++j) acc += (xs[j] - xi) * std::abs(yp[j] - yi);
      cross += acc;
    }
    cross *= 2.0;
    double rows = 0.0;
    for (std::size_t i = 0; i < n; ++i) rows += x_rows[i] * yr[i];
    const double dn = static_cast<double>(n);
    return cross - 2.0 / dn * rows + x_total * y_total / (dn * dn);
  }

  double correlation(double dcov_value) const {
    const double denom = std::sqrt(x_var * y_var);
    if (!(denom > 0.0)) return 0.0;
    return std::sqrt(std::max(0.0, dcov_value / denom));
  }
};

}  // namespace

double rank_distance_correlation(const std::vector<double>& x, const std::vector<double>& y) {
  detail::require(x.size() == y.size() && x.size() >= 2, "paired samples of equal size needed");
  const DcovKernel k(x, y);
  return k.correlation(k.dcov({}));
}

StatReport independence_test(const std::vector<double>& x, const std::vector<double>& y,
                             const PermutationOptions& options, double level) {
  detail::require(x.size() == y.size(), "independence test needs paired samples");
  const std::size_t n = x.size();
  if (n < kMinDcorSample || n > kMaxDcorSample)
    detail::domain_fail("independence test needs 200 <= n <= 10000");
  detail::require(options.permutations >= 199, "independence test needs at least 199 permutations");
  const DcovKernel kernel(x, y);
  const double observed = kernel.dcov({});
  std::vector<double> permuted(options.permutations);
  parallel_for(options.permutations, options.workers, [&](std::size_t k) {
    RngStream rng(options.seed, RngStream::derive_stream_id(0x6463'6f72ull, k));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform_index(i + 1)]);
    permuted[k] = kernel.dcov(perm);
  });
  // Ties within rounding count as exceedances.
  const double slack = 1e-12 * std::abs(observed);
  std::size_t exceed = 0;
  for (double v : permuted)
    if (v >= observed - slack) ++exceed;
  StatReport r;
  r.test = TestKind::DistCorrPerm;
  r.statistic = kernel.correlation(observed);
  r.threshold = level;
  r.p_value = static_cast<double>(1 + exceed) / static_cast<double>(options.permutations + 1);
  r.n = n;
  r.seed = options.seed;
  r.pass = *r.p_value > level;
  return r;
}

// ---------------------------------------------------------------------------

StatReport moment_ci(const std::vector<double>& x, double target, const std::function<double(double)>& fn) {
  detail::require(x.size() >= 2, "moment test needs at least two samples");
  const double n = static_cast<double>(x.size());
  double mean = 0.0;
  for (double v : x) mean += fn ? fn(v) : v;
  mean /= n;
  double m2 = 0.0;
  double m4 = 0.0;
  for (double v : x) {
    const double d = (fn ? fn(v) : v) - mean;
    m2 += d * d;
    m4 += d * d * d * d;
  }
  if (!std::isfinite(m2) || !std::isfinite(mean)) detail::domain_fail("moment test: non-finite variance");
  const double var = m2 / (n - 1.0);
  StatReport r;
  r.test = TestKind::MomentCI;
  r.n = x.size();
  r.statistic = std::abs(mean - target);
  std::ostringstream note;
  note.precision(6);
  note << "mean=" << mean;
  if (var == 0.0) {
    r.threshold = 0.0;
    r.pass = mean == target;
    r.p_value = r.pass ? 1.0 : 0.0;
  } else {
    const double se = std::sqrt(var / n);
    r.threshold = 3.0 * se;
    r.pass = r.statistic <= r.threshold;
    r.p_value = std::erfc(r.statistic / se / std::sqrt(2.0));
    const double mm2 = m2 / n;
    note << " se=" << se << " excess_kurtosis=" << (m4 / n) / (mm2 * mm2) - 3.0;
  }
  r.note = note.str();
  return r;
}

MajorityVerdict majority(const std::vector<StatReport>& runs) {
  MajorityVerdict v;
  v.runs = runs.size();
  for (const StatReport& r : runs)
    if (r.pass) ++v.passed;
  return v;
}

CalibrationResult null_calibration(TestKind test, std::size_t runs, std::uint64_t seed, double level,
                                   unsigned workers) {
  std::vector<char> rejected(runs, 0);
  parallel_for(runs, workers, [&](std::size_t k) {
    RngStream rng(seed, RngStream::derive_stream_id(0x6e75'6c6cull, k));
    bool pass = true;
    switch (test) {
      case TestKind::KS1: {
        std::vector<double> x(1000);
        for (double& v : x) v = rng.uniform();
        pass = ks_one_sample(std::move(x), [](double u) { return std::clamp(u, 0.0, 1.0); }, level).pass;
        break;
      }
      case TestKind::KS2: {
        std::vector<double> x(1000);
        std::vector<double> y(1000);
        for (double& v : x) v = rng.uniform();
        for (double& v : y) v = rng.uniform();
        pass = ks_two_sample(std::move(x), std::move(y), level).pass;
        break;
      }
      case TestKind::DistCorrPerm: {
        std::vector<double> x(200);
        std::vector<double> y(200);
        for (double& v : x) v = rng.exponential();
        for (double& v : y) v = rng.exponential();
        PermutationOptions opt;
        opt.permutations = 199;
        opt.seed = mix64(seed ^ k);
        pass = independence_test(x, y, opt, level).pass;
        break;
      }
      case TestKind::MomentCI: {
        std::vector<double> x(1000);
        for (double& v : x) v = rng.exponential();
        pass = moment_ci(x, 1.0).pass;
        break;
      }
      case TestKind::Chi2Binned:
      case TestKind::NumericTolerance: throw UnsupportedFamily("no null model for this test");
    }
    rejected[k] = pass ? 0 : 1;
  });
  CalibrationResult out;
  out.test = test;
  out.runs = runs;
  out.rejections = static_cast<std::size_t>(std::count(rejected.begin(), rejected.end(), 1));
  return out;
}

}  // namespace rscale
