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
#include <vector>

#include "rscale/rng.hpp"
#include "rscale/special_fn.hpp"

namespace rscale {

/// One atom of a purely atomic random measure on [0, 1].
struct Jump {
  double size;
  double location;
};

/// A sampled random measure: finitely many simulated jumps (largest first)
/// plus the expected mass of the jumps that were not simulated.
struct JumpMeasure {
  std::vector<Jump> jumps;
  /// Sum of all simulated jumps (fixed atoms included) plus tail_bound.
  double total_mass = 0.0;
  /// Expected mass of the unsimulated small jumps.
  double tail_bound = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
  /// Candidate jumps generated before thinning (cost diagnostic).
  std::size_t candidates = 0;

  double largest() const noexcept { return jumps.empty() ? 0.0 : jumps.front().size; }
  /// Every size and mass multiplied by c > 0.
  JumpMeasure scaled(double c) const;
};

/// Ranked weights P_1 >= P_2 >= ... of a random discrete probability measure.
struct RankedWeights {
  std::vector<double> p;
  /// 1 - sum(p): mass that was not simulated.
  double deficit = 0.0;

  double leader() const noexcept { return p.empty() ? 0.0 : p.front(); }
};

/// Sizes of the blocks of a random partition of {1, ..., n}.
struct PartitionState {
  std::size_t n = 0;
  std::vector<std::size_t> block_sizes;

  std::size_t blocks() const noexcept { return block_sizes.size(); }
};

inline constexpr double kDefaultTruncation = 1e-6;
inline constexpr std::size_t kDefaultMaxCandidates = 200'000'000;

/// Jumps of the subordinator with Levy density alpha t^{-alpha-1} e^{-bt} / Gamma(1-alpha)
/// on the unit interval, atoms uniform on [0, 1].
///
/// Stable jumps are generated in decreasing order by inverting the stable tail
/// (Ferguson-Klass), and each is kept with probability e^{-bJ}. Generation stops
/// once the expected mass of all smaller jumps is at most `truncation` times the
/// mass collected so far. Throws TruncationError after `max_candidates` proposals.
JumpMeasure sample_gg_measure(RngStream& rng, StableParams p, double b,
                              double truncation = kDefaultTruncation,
                              std::size_t max_candidates = kDefaultMaxCandidates);

/// Size-biased version of sample_gg_measure: the same jumps plus one extra atom
/// G_{1-alpha} / b at a uniform location. Requires b > 0.
JumpMeasure bridge_measure(RngStream& rng, StableParams p, double b,
                           double truncation = kDefaultTruncation,
                           std::size_t max_candidates = kDefaultMaxCandidates);

/// Jumps of the gamma subordinator with Levy density kappa t^{-1} e^{-rate t} on
/// [0, 1], by Bondesson's series J_i = e^{-Gamma_i/kappa} E_i / rate, sorted
/// afterwards. Stops when the expected remainder kappa e^{-Gamma_n/kappa} / rate
/// is at most `truncation` times the collected mass.
JumpMeasure sample_gamma_process_measure(RngStream& rng, double kappa, double rate,
                                         double truncation = kDefaultTruncation,
                                         std::size_t max_candidates = kDefaultMaxCandidates);

/// Jump sizes divided by the total mass, largest first.
RankedWeights normalize(const JumpMeasure& m);

struct StickBreakingOptions {
  /// Minimum number of sticks broken.
  std::size_t min_sticks = 1000;
  /// Stop once the unbroken remainder is below this and below the largest weight.
  double deficit_tolerance = 1e-6;
  /// Throws TruncationError when more sticks would be needed.
  std::size_t max_sticks = 20'000'000;
};

/// PD(alpha, theta) ranked weights from W_j ~ Beta(1 - alpha, theta + j alpha),
/// 0 <= alpha < 1, theta > -alpha. The stopping rule also requires the
/// remainder to be smaller than the current largest weight, so p[0] is exact.
RankedWeights stick_breaking_pd(RngStream& rng, double alpha, double theta,
                                const StickBreakingOptions& options = {});

/// Sequential (alpha, theta) Chinese restaurant seating of n customers.
PartitionState crp_partition(RngStream& rng, double alpha, double theta, std::size_t n);

/// K_n / n^alpha.
double diversity_estimate(const PartitionState& part, double alpha);

}  // namespace rscale
