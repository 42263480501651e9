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

#include <functional>
#include <vector>

#include "rscale/rng.hpp"

namespace rscale {

/// A law on (0, inf) given only through a (possibly unnormalized) density.
///
/// Construction tabulates the distribution function in log-space: the density
/// is scanned to find its effective support, split into short segments whose
/// masses come from adaptive Gauss-Kronrod quadrature, and the two tails are
/// integrated separately with tanh-sinh / exp-sinh rules. Quantiles are found
/// by bracketed Newton iteration in log t to a relative tolerance of 1e-12.
///
/// The object is immutable after construction and may be shared by any
/// number of threads.
class NumericDistribution {
 public:
  explicit NumericDistribution(std::function<double(double)> density);

  /// Integral of the supplied density over (0, inf).
  double normalizer() const noexcept { return total_; }
  /// Normalized density.
  double pdf(double t) const;
  double cdf(double t) const;
  double quantile(double u) const;
  double sample(RngStream& rng) const { return quantile(rng.uniform()); }

 private:
  double log_space(double y) const;  // density of log T, unnormalized
  double segment_mass(double y0, double y1) const;
  double tail_left(double y) const;    // mass of (-inf, y] in log space
  double tail_right(double y) const;   // mass of [y, inf)
  double solve_in_segment(std::size_t i, double target) const;
  double solve_tail(bool left, double target) const;

  std::function<double(double)> density_;
  double y_lo_ = 0.0;
  double step_ = 0.0;
  std::vector<double> cum_;  // mass of (-inf, y_lo + i*step]
  double total_ = 0.0;
  double right_mass_ = 0.0;
};

}  // namespace rscale
