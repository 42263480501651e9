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


#include "rscale/measures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "rscale/error.hpp"
#include "rscale/samplers.hpp"

namespace rscale {

JumpMeasure JumpMeasure::scaled(double c) const {
  detail::require(c > 0.0, "scale factor must be positive");
  JumpMeasure out = *this;
  for (Jump& j : out.jumps) j.size *= c;
  out.total_mass *= c;
  out.tail_bound *= c;
  return out;
}

JumpMeasure sample_gg_measure(RngStream& rng, StableParams p, double b, double truncation,
                              std::size_t max_candidates) {
  detail::require(b >= 0.0, "tilt b must be nonnegative");
  detail::require(truncation > 0.0 && truncation < 1.0, "truncation must lie in (0, 1)");
  const double alpha = p.alpha();
  const double gamma1 = std::tgamma(1.0 - alpha);
  // Mass of stable jumps below J is coef * J^{1-alpha}; an upper bound for the tilted case.
  const double coef = alpha / ((1.0 - alpha) * gamma1);

  JumpMeasure m;
  m.seed = rng.seed();
  m.stream_id = rng.stream_id();
  double arrival = 0.0;
  double sum = 0.0;
  double last = 0.0;
  for (;;) {
    if (m.candidates >= max_candidates)
      throw TruncationError("generalized gamma jump simulation hit its candidate cap");
    arrival += rng.exponential();
    ++m.candidates;
    const double log_j = -std::log(gamma1 * arrival) / alpha;
    last = std::exp(log_j);
    if (b == 0.0 || rng.uniform() < std::exp(-b * last)) {
      m.jumps.push_back({last, rng.uniform()});
      sum += last;
    }
    if (sum > 0.0 && coef * std::exp((1.0 - alpha) * log_j) <= truncation * sum) break;
  }
  m.tail_bound = LevyDensityModel::power_law(alpha / gamma1, alpha, b).small_jump_mass(last);
  m.total_mass = sum + m.tail_bound;
  return m;
}

JumpMeasure bridge_measure(RngStream& rng, StableParams p, double b, double truncation,
                           std::size_t max_candidates) {
  detail::require(b > 0.0, "bridge needs b > 0");
  JumpMeasure m = sample_gg_measure(rng, p, b, truncation, max_candidates);
  const Jump extra{sample_gamma(rng, 1.0 - p.alpha()) / b, rng.uniform()};
  auto pos = std::upper_bound(m.jumps.begin(), m.jumps.end(), extra,
                              [](const Jump& x, const Jump& y) { return x.size > y.size; });
  m.jumps.insert(pos, extra);
  m.total_mass += extra.size;
  return m;
}

JumpMeasure sample_gamma_process_measure(RngStream& rng, double kappa, double rate,
                                         double truncation, std::size_t max_candidates) {
  detail::require(kappa > 0.0 && rate > 0.0, "gamma process needs kappa > 0 and rate > 0");
  detail::require(truncation > 0.0 && truncation < 1.0, "truncation must lie in (0, 1)");
  JumpMeasure m;
  m.seed = rng.seed();
  m.stream_id = rng.stream_id();
  double arrival = 0.0;
  double sum = 0.0;
  double remainder = kappa / rate;
  for (;;) {
    if (m.candidates >= max_candidates)
      throw TruncationError("gamma process jump simulation hit its candidate cap");
    arrival += rng.exponential();
    ++m.candidates;
    const double w = std::exp(-arrival / kappa);
    const double size = w * rng.exponential() / rate;
    if (size > 0.0) {
      m.jumps.push_back({size, rng.uniform()});
      sum += size;
    }
    remainder = kappa * w / rate;
    if (sum > 0.0 && remainder <= truncation * sum) break;
  }
  std::sort(m.jumps.begin(), m.jumps.end(),
            [](const Jump& x, const Jump& y) { return x.size > y.size; });
  m.tail_bound = remainder;
  m.total_mass = sum + remainder;
  return m;
}

RankedWeights normalize(const JumpMeasure& m) {
  detail::require(m.total_mass > 0.0, "cannot normalize a measure with zero mass");
  RankedWeights w;
  w.p.reserve(m.jumps.size());
  for (const Jump& j : m.jumps) w.p.push_back(j.size / m.total_mass);
  if (!std::is_sorted(w.p.begin(), w.p.end(), std::greater<>())) std::sort(w.p.begin(), w.p.end(), std::greater<>());
  w.deficit = m.tail_bound / m.total_mass;
  return w;
}

RankedWeights stick_breaking_pd(RngStream& rng, double alpha, double theta,
                                const StickBreakingOptions& options) {
  detail::require(alpha >= 0.0 && alpha < 1.0, "alpha must lie in [0, 1)");
  detail::require(theta > -alpha, "theta must exceed -alpha");
  detail::require(options.deficit_tolerance > 0.0, "deficit tolerance must be positive");
  RankedWeights w;
  double remainder = 1.0;
  double largest = 0.0;
  std::size_t j = 0;
  while (j < options.min_sticks || remainder > options.deficit_tolerance || remainder >= largest) {
    if (j >= options.max_sticks)
      throw TruncationError("stick breaking did not reach its deficit tolerance");
    ++j;
    const BetaPair bp = sample_beta_pair(rng, 1.0 - alpha, theta + static_cast<double>(j) * alpha);
    const double piece = bp.value * remainder;
    w.p.push_back(piece);
    largest = std::max(largest, piece);
    remainder *= bp.complement;
  }
  std::sort(w.p.begin(), w.p.end(), std::greater<>());
  w.deficit = remainder;
  return w;
}

PartitionState crp_partition(RngStream& rng, double alpha, double theta, std::size_t n) {
  detail::require(alpha >= 0.0 && alpha < 1.0, "alpha must lie in [0, 1)");
  detail::require(theta > -alpha, "theta must exceed -alpha");
  detail::require(n >= 1, "need at least one customer");
  PartitionState part;
  part.n = n;
  // Block label of every customer who joined an existing block. Picking one of
  // them uniformly selects block c with probability (c - 1) / (m - K).
  std::vector<std::size_t> followers;
  followers.reserve(n);
  part.block_sizes.push_back(1);
  for (std::size_t m = 1; m < n; ++m) {
    const double k = static_cast<double>(part.block_sizes.size());
    const double u = rng.uniform() * (theta + static_cast<double>(m));
    const double new_weight = theta + k * alpha;
    if (u < new_weight) {
      part.block_sizes.push_back(1);
      continue;
    }
    std::size_t block;
    if (u - new_weight < k * (1.0 - alpha) || followers.empty())
      block = rng.uniform_index(part.block_sizes.size());
    else
      block = followers[rng.uniform_index(followers.size())];
    ++part.block_sizes[block];
    followers.push_back(block);
  }
  return part;
}

double diversity_estimate(const PartitionState& part, double alpha) {
  detail::require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
  detail::require(part.n >= 1, "empty partition");
  return static_cast<double>(part.blocks()) / std::pow(static_cast<double>(part.n), alpha);
}

}  // namespace rscale
