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

#include <cstdint>
#include <vector>

#include "rscale/measures.hpp"
#include "rscale/rng.hpp"
#include "rscale/samplers.hpp"
#include "rscale/special_fn.hpp"
#include "rscale/stats.hpp"

namespace rscale {

/// A joint draw (xi, T) with T independent of xi T.
struct ScalarCoupling {
  double xi = 0.0;
  double T = 0.0;
  CumulantFamily family = CumulantFamily::Gamma;
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;

  double xiT() const noexcept { return xi * T; }
};

/// One draw of the exponential tilt T0^{(s)}, density e^{-st + psi(s)} f(t):
/// Gamma(a) -> G_a / (1 + s); (tilted) stable -> X_{alpha, b+s};
/// size-biased -> X_{alpha, b+s} + G_{1-alpha} / (b + s); generic -> numeric
/// inverse CDF (requires an attached density, built per call).
double sample_exponential_tilt(RngStream& rng, const CumulantModel& model, double s,
                               RejectionStats* stats = nullptr);

/// xi from the law's scaling density, then T from the tilt of T0 at xi.
ScalarCoupling couple_scalar(RngStream& rng, const XiLaw& law, RejectionStats* stats = nullptr);
ScalarCoupling couple_scalar(RngStream& rng, const CumulantModel& model, double nu);

/// A scaling variable paired with a random measure and its normalization.
struct MeasureCoupling {
  double xi = 0.0;
  JumpMeasure measure;
  RankedWeights weights;
  double T = 0.0;

  double xiT() const noexcept { return xi * T; }
};

/// xi from the tilted-stable scaling law at (b, nu); the measure has the
/// generalized gamma Levy density with tilt b + xi.
MeasureCoupling couple_gg_measure(RngStream& rng, StableParams p, double b, double nu,
                                  double truncation = kDefaultTruncation);

/// xi from the size-biased scaling law at (b, nu), b > 0; the measure is the
/// bridge (one extra G_{1-alpha} atom) at tilt b + xi.
MeasureCoupling couple_size_biased(RngStream& rng, StableParams p, double b, double nu,
                                   double truncation = kDefaultTruncation);

/// With Z = (G_1 + b^alpha)^{1/alpha}: scaled = tau_alpha(Z^alpha + G_{(1-alpha)/alpha}) / Z
/// and decoupled = (Z - b) * scaled.
struct RandomScalingDraw {
  double scaled = 0.0;
  double decoupled = 0.0;
};
RandomScalingDraw random_scaling_draw(RngStream& rng, StableParams p, double b);

/// Full-range PD(alpha, theta) draw via the randomized bridge.
struct PdBridgeDraw {
  double xi_H = 0.0;
  double H = 0.0;
  RankedWeights weights;
  double T = 0.0;

  double tilt() const noexcept { return xi_H + H; }
};

/// (xi_H, H) from the beta-gamma pair, bridge measure at tilt xi_H + H, normalized.
PdBridgeDraw couple_pd_bridge(RngStream& rng, StableParams p, double theta,
                              double truncation = kDefaultTruncation);

/// (xi_H, H) by mixing: H first, then xi from the size-biased scaling law with
/// b = H and nu = theta + alpha. Equal in law to sample_xi_H_pair.
XiHPair sample_xi_H_mixture(RngStream& rng, StableParams p, double theta);

/// zeta = G_{theta/alpha}, total = tau_alpha(zeta), scaled = total / zeta^{1/alpha}.
/// `partial` is tau_alpha(y zeta); the remainder tau_alpha((1-y) zeta) is an
/// independent increment and draws nothing when y = 1.
struct StableGammaDraw {
  double zeta = 0.0;
  double total = 0.0;
  double scaled = 0.0;
  double partial = 0.0;
};
StableGammaDraw stable_gamma_draw(RngStream& rng, StableParams p, double theta);
StableGammaDraw stable_gamma_path_draw(RngStream& rng, StableParams p, double theta, double y);

/// KS of tau_alpha(zeta) against G_theta, independence of scaled and total,
/// KS of scaled against t^{-theta} f_alpha(t) (numeric CDF), and independence
/// of partial/total from total. Replicate r uses stream (seed, r).
std::vector<StatReport> stable_gamma_algebra_check(std::uint64_t seed, StableParams p, double theta,
                                                   double y, std::size_t n,
                                                   double level = kDefaultLevel, unsigned workers = 1);

/// Compares three evaluations of the joint density of (xi, T) on a grid:
/// scaling law times tilted conditional, T marginal times xi-given-T (from
/// xi T ~ G_nu independent of T), and the closed form (Gamma family only).
struct FactorizationReport {
  double max_rel_conditional_vs_marginal = 0.0;
  double max_rel_conditional_vs_closed = 0.0;
  std::size_t points = 0;
};
FactorizationReport factorization_check(const CumulantModel& gamma_model, double nu,
                                        const std::vector<double>& s_grid,
                                        const std::vector<double>& t_grid);

}  // namespace rscale
