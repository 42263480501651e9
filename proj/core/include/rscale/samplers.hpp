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
#include <memory>

#include "rscale/numeric_distribution.hpp"
#include "rscale/rng.hpp"
#include "rscale/special_fn.hpp"

namespace rscale {

/// Tilt parameters shared by the coupling families.
struct TiltParams {
  double b = 0.0;      ///< exponential tilt, >= 0
  double nu = 1.0;     ///< polynomial tilt order, > 0
  double theta = 0.0;  ///< Poisson-Dirichlet concentration, > -alpha

  /// Throws DomainError when b < 0, nu <= 0 or theta <= -alpha.
  void validate(StableParams p) const;
};

/// Proposal/acceptance counters for the rejection samplers.
struct RejectionStats {
  std::uint64_t proposals = 0;
  std::uint64_t accepted = 0;

  double acceptance_rate() const noexcept {
    return proposals == 0 ? 1.0 : static_cast<double>(accepted) / static_cast<double>(proposals);
  }
};

/// Gamma(a, 1) by Marsaglia-Tsang, with the U^{1/a} boost for a < 1.
double sample_gamma(RngStream& rng, double a);

/// Beta(a, b) as G_a / (G_a + G_b), strictly inside (0, 1).
double sample_beta(RngStream& rng, double a, double b);

/// (B, 1 - B) for B ~ Beta(a, b), with the complement computed as
/// G_b / (G_a + G_b) rather than by subtraction.
struct BetaPair {
  double value;
  double complement;
};
BetaPair sample_beta_pair(RngStream& rng, double a, double b);

/// Positive stable S with E[exp(-sS)] = exp(-s^alpha) (Kanter's representation).
double sample_pos_stable(RngStream& rng, StableParams p);

/// X_{alpha,b}, density exp(-bt + b^alpha) f_alpha(t).
///
/// For b^alpha <= 1 this is plain rejection of stable proposals (accept with
/// probability exp(-bS)). Larger tilts are split by infinite divisibility into
/// m = ceil(b^alpha) independent pieces m^{-1/alpha} X_{alpha, b m^{-1/alpha}},
/// each with tilt exponent at most 1, so the expected cost is about e * b^alpha
/// proposals instead of exp(b^alpha).
double sample_tilted_stable(RngStream& rng, StableParams p, double b, RejectionStats* stats = nullptr);

/// Value at time `time` of the subordinator with Levy density
/// alpha t^{-alpha-1} e^{-bt} / Gamma(1 - alpha). Equals time^{1/alpha} X_{alpha, b time^{1/alpha}}.
double sample_tilted_subordinator(RngStream& rng, StableParams p, double b, double time,
                                  RejectionStats* stats = nullptr);

/// The generalized gamma subordinator tau_alpha (unit tilt) at `time`.
inline double sample_gg_subordinator(RngStream& rng, StableParams p, double time) {
  return sample_tilted_subordinator(rng, p, 1.0, time);
}

/// The scaling law of a polynomially tilted coupling: density
/// exp(-psi(s)) s^{nu-1} / (E[T0^{-nu}] Gamma(nu)) on s > 0.
class XiLaw {
 public:
  /// Throws NonIntegrable when E[T0^{-nu}] is infinite.
  XiLaw(CumulantModel model, double nu);

  const CumulantModel& model() const noexcept { return model_; }
  double nu() const noexcept { return nu_; }
  /// E[T0^{-nu}] * Gamma(nu).
  double normalizer() const noexcept { return normalizer_; }
  double density(double s) const;

  /// Numeric inverse-CDF table (GenericNumeric laws only; null otherwise).
  const NumericDistribution* table() const noexcept { return table_.get(); }

 private:
  CumulantModel model_;
  double nu_;
  double normalizer_;
  std::shared_ptr<const NumericDistribution> table_;
};

/// One draw from an XiLaw:
///  - Gamma(a): xi = G_nu / G_{a-nu} (beta-prime);
///  - stable / tilted stable with b = 0: G_{nu/alpha}^{1/alpha};
///  - tilted stable b > 0: rejection from the b = 0 law, acceptance exp(s^alpha - (b+s)^alpha);
///  - size-biased: rejection from the tilted law, acceptance (1 + s/b)^{alpha-1};
///  - generic: numeric inverse CDF.
double sample_xi(RngStream& rng, const XiLaw& law, RejectionStats* stats = nullptr);

/// The xi law of the tilted stable family at tilt b without building an XiLaw
/// (no normalizer is needed for sampling).
double sample_xi_tilted(RngStream& rng, StableParams p, double b, double nu,
                        RejectionStats* stats = nullptr);

/// The xi law of the size-biased tilted stable family, b > 0.
double sample_xi_size_biased(RngStream& rng, StableParams p, double b, double nu,
                             RejectionStats* stats = nullptr);

/// H_{alpha,theta} = G_{(theta+alpha)/alpha}^{1/alpha} B_{1-alpha, theta+alpha}.
double sample_H(RngStream& rng, StableParams p, double theta);

struct XiHPair {
  double xi;
  double H;
};

/// (xi_H, H) = G_{(theta+alpha)/alpha}^{1/alpha} (B, 1 - B), B ~ Beta(theta+alpha, 1-alpha).
XiHPair sample_xi_H_pair(RngStream& rng, StableParams p, double theta);

}  // namespace rscale
