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

#include "rscale/numeric_distribution.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "rscale/error.hpp"
#include "rscale/quadrature.hpp"

namespace rscale {
namespace {

constexpr double kScanLo = -120.0;
constexpr double kScanHi = 120.0;
constexpr double kScanStep = 0.25;
constexpr double kSupportCut = 1e-20;
constexpr double kLogTol = 1e-12;

}  // namespace

NumericDistribution::NumericDistribution(std::function<double(double)> density)
    : density_(std::move(density)) {
  detail::require(static_cast<bool>(density_), "density must be callable");

  double g_max = 0.0;
  std::vector<double> scan;
  for (double y = kScanLo; y <= kScanHi + 1e-9; y += kScanStep) {
    scan.push_back(log_space(y));
    g_max = std::max(g_max, scan.back());
  }
  if (!(g_max > 0.0)) throw NumericalError("density vanishes on the scan range", 0.0);

  std::size_t first = 0;
  std::size_t last = scan.size() - 1;
  while (first < last && scan[first] < kSupportCut * g_max) ++first;
  while (last > first && scan[last] < kSupportCut * g_max) --last;
  double lo = kScanLo + kScanStep * (first == 0 ? 0.0 : static_cast<double>(first) - 1.0);
  double hi = kScanLo + kScanStep * std::min<double>(static_cast<double>(last) + 1.0, scan.size() - 1);
  if (hi - lo < 1.0) {
    lo -= 0.5;
    hi += 0.5;
  }

  step_ = std::min(0.1, (hi - lo) / 400.0);
  const auto segments = static_cast<std::size_t>(std::ceil((hi - lo) / step_));
  y_lo_ = lo;

  cum_.resize(segments + 1);
  cum_[0] = tail_left(y_lo_);
  for (std::size_t i = 0; i < segments; ++i) {
    const double y0 = y_lo_ + step_ * static_cast<double>(i);
    auto g = [this](double y) { return log_space(y); };
    const quad::Result r = quad::finite(g, y0, y0 + step_, 1e-13, 12);
    cum_[i + 1] = cum_[i] + r.value;
  }
  right_mass_ = tail_right(y_lo_ + step_ * static_cast<double>(segments));
  total_ = cum_.back() + right_mass_;
  if (!(total_ > 0.0) || !std::isfinite(total_)) throw NumericalError("density is not integrable", total_);
}

double NumericDistribution::log_space(double y) const {
  const double t = std::exp(y);
  if (t <= 0.0 || !std::isfinite(t)) return 0.0;
  const double f = density_(t);
  if (std::isnan(f) || f < 0.0) throw NumericalError("density returned an invalid value", f);
  if (std::isinf(f)) {
    // Products like (1 - e^{-t}) lambda(t) overflow in the far left tail while
    // f t still vanishes; that region carries no mass at double precision.
    if (t < 1e-100) return 0.0;
    throw NumericalError("density is unbounded away from 0", f);
  }
  return f * t;
}

double NumericDistribution::segment_mass(double y0, double y1) const {
  auto g = [this](double y) { return log_space(y); };
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(g, y0, y1, 0, 0.0);
}

double NumericDistribution::tail_left(double y) const {
  auto g = [this](double z) { return log_space(-z); };
  return quad::to_infinity(g, -y).value;
}

double NumericDistribution::tail_right(double y) const {
  auto g = [this](double z) { return log_space(z); };
  return quad::to_infinity(g, y).value;
}

double NumericDistribution::pdf(double t) const {
  if (t <= 0.0) return 0.0;
  return density_(t) / total_;
}

double NumericDistribution::cdf(double t) const {
  if (t <= 0.0) return 0.0;
  if (std::isinf(t)) return 1.0;
  const double y = std::log(t);
  const double y_hi = y_lo_ + step_ * static_cast<double>(cum_.size() - 1);
  if (y <= y_lo_) return tail_left(y) / total_;
  if (y >= y_hi) return 1.0 - tail_right(y) / total_;
  const auto i = std::min(static_cast<std::size_t>((y - y_lo_) / step_), cum_.size() - 2);
  const double y0 = y_lo_ + step_ * static_cast<double>(i);
  return std::clamp((cum_[i] + segment_mass(y0, y)) / total_, 0.0, 1.0);
}

double NumericDistribution::solve_in_segment(std::size_t i, double target) const {
  double a = y_lo_ + step_ * static_cast<double>(i);
  double b = a + step_;
  const double y0 = a;
  const double width_mass = cum_[i + 1] - cum_[i];
  double y = a + step_ * std::clamp(target / width_mass, 0.0, 1.0);
  for (int iter = 0; iter < 100; ++iter) {
    const double f = segment_mass(y0, y) - target;
    if (f > 0.0) b = y;
    else a = y;
    const double g = log_space(y);
    double next = g > 0.0 ? y - f / g : 0.5 * (a + b);
    if (!(next > a && next < b)) next = 0.5 * (a + b);
    if (std::abs(next - y) < kLogTol || b - a < kLogTol) return next;
    y = next;
  }
  return y;
}

double NumericDistribution::solve_tail(bool left, double target) const {
  // left: tail_left(y) = target, increasing in y.  right: tail_right(y) = target, decreasing.
  const double y_edge = left ? y_lo_ : y_lo_ + step_ * static_cast<double>(cum_.size() - 1);
  double a = y_edge;
  double b = y_edge;
  double width = 1.0;
  if (left) {
    while (tail_left(a) > target && width < 1e4) { a -= width; width *= 2.0; }
  } else {
    while (tail_right(b) > target && width < 1e4) { b += width; width *= 2.0; }
  }
  for (int iter = 0; iter < 200 && b - a > kLogTol; ++iter) {
    const double mid = 0.5 * (a + b);
    const double mass = left ? tail_left(mid) : tail_right(mid);
    const bool below = left ? mass < target : mass > target;
    if (below) a = mid;
    else b = mid;
  }
  return 0.5 * (a + b);
}

double NumericDistribution::quantile(double u) const {
  detail::require(u > 0.0 && u < 1.0, "quantile needs u in (0, 1)");
  const double m = u * total_;
  double y;
  if (m <= cum_.front()) {
    y = solve_tail(true, m);
  } else if ((1.0 - u) * total_ <= right_mass_) {
    y = solve_tail(false, (1.0 - u) * total_);
  } else {
    const auto it = std::upper_bound(cum_.begin(), cum_.end(), m);
    const auto i = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, (it - cum_.begin()) - 1));
    y = solve_in_segment(std::min(i, cum_.size() - 2), m - cum_[std::min(i, cum_.size() - 2)]);
  }
  return std::exp(y);
}

}  // namespace rscale
