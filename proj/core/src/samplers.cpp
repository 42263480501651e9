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


#include "rscale/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rscale/error.hpp"

namespace rscale {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTiny = std::numeric_limits<double>::min();

// Marsaglia-Tsang for a >= 1.
double gamma_large(RngStream& rng, double a) {
  const double d = a - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double tilted_stable_plain(RngStream& rng, StableParams p, double b, RejectionStats* stats) {
  for (;;) {
    const double s = sample_pos_stable(rng, p);
    if (stats) ++stats->proposals;
    // accept with probability exp(-b s)
    if (rng.exponential() > b * s) {
      if (stats) ++stats->accepted;
      return s;
    }
  }
}

}  // namespace

void TiltParams::validate(StableParams p) const {
  detail::require(b >= 0.0, "b must be nonnegative");
  detail::require(nu > 0.0, "nu must be positive");
  detail::require(theta > -p.alpha(), "theta must exceed -alpha");
}

double sample_gamma(RngStream& rng, double a) {
  detail::require(a > 0.0, "gamma shape must be positive");
  if (a >= 1.0) return gamma_large(rng, a);
  // G_a = G_{a+1} U^{1/a}, combined in log space; clamp the (rare) underflow.
  const double log_g = std::log(gamma_large(rng, a + 1.0)) + std::log(rng.uniform()) / a;
  return std::max(std::exp(log_g), kTiny);
}

BetaPair sample_beta_pair(RngStream& rng, double a, double b) {
  detail::require(a > 0.0 && b > 0.0, "beta parameters must be positive");
  const double ga = sample_gamma(rng, a);
  const double gb = sample_gamma(rng, b);
  const double sum = ga + gb;
  BetaPair out{ga / sum, gb / sum};
  const double below_one = std::nextafter(1.0, 0.0);
  out.value = std::clamp(out.value, kTiny, below_one);
  out.complement = std::clamp(out.complement, kTiny, below_one);
  return out;
}

double sample_beta(RngStream& rng, double a, double b) { return sample_beta_pair(rng, a, b).value; }

double sample_pos_stable(RngStream& rng, StableParams p) {
  const double alpha = p.alpha();
  const double u = kPi * rng.uniform();
  const double e = rng.exponential();
  return std::exp((1.0 - alpha) / alpha * (log_kanter(alpha, u) - std::log(e)));
}

double sample_tilted_stable(RngStream& rng, StableParams p, double b, RejectionStats* stats) {
  detail::require(b >= 0.0, "tilt b must be nonnegative");
  if (b == 0.0) {
    if (stats) {
      ++stats->proposals;
      ++stats->accepted;
    }
    return sample_pos_stable(rng, p);
  }
  const double alpha = p.alpha();
  const double load = std::pow(b, alpha);
  if (load <= 1.0) return tilted_stable_plain(rng, p, b, stats);
  const double m = std::ceil(load);
  const double shrink = std::pow(m, -1.0 / alpha);
  const double piece_tilt = b * shrink;
  double sum = 0.0;
  for (int k = 0; k < static_cast<int>(m); ++k) sum += tilted_stable_plain(rng, p, piece_tilt, stats);
  return shrink * sum;
}

double sample_tilted_subordinator(RngStream& rng, StableParams p, double b, double time,
                                  RejectionStats* stats) {
  detail::require(time >= 0.0, "subordinator time must be nonnegative");
  detail::require(b >= 0.0, "tilt b must be nonnegative");
  if (time == 0.0) return 0.0;
  const double c = std::pow(time, 1.0 / p.alpha());
  return c * sample_tilted_stable(rng, p, b * c, stats);
}

// ---------------------------------------------------------------------------

XiLaw::XiLaw(CumulantModel model, double nu) : model_(std::move(model)), nu_(nu) {
  detail::require(nu > 0.0, "nu must be positive");
  normalizer_ = neg_moment(model_, nu_) * std::tgamma(nu_);
  if (model_.family() == CumulantFamily::GenericNumeric) {
    const CumulantModel m = model_;
    const double v = nu_;
    table_ = std::make_shared<const NumericDistribution>(
        [m, v](double s) { return std::exp((v - 1.0) * std::log(s) - m.psi(s)); });
  }
}

double XiLaw::density(double s) const {
  if (s <= 0.0) return 0.0;
  return std::exp((nu_ - 1.0) * std::log(s) - model_.psi(s)) / normalizer_;
}

namespace {

double xi_stable(RngStream& rng, double alpha, double nu) {
  return std::pow(sample_gamma(rng, nu / alpha), 1.0 / alpha);
}

double xi_tilted(RngStream& rng, double alpha, double b, double nu, RejectionStats* stats) {
  if (b == 0.0) {
    if (stats) {
      ++stats->proposals;
      ++stats->accepted;
    }
    return xi_stable(rng, alpha, nu);
  }
  for (;;) {
    const double s = xi_stable(rng, alpha, nu);
    if (stats) ++stats->proposals;
    // accept with probability exp(s^alpha - (b+s)^alpha)
    if (rng.exponential() > std::pow(b + s, alpha) - std::pow(s, alpha)) {
      if (stats) ++stats->accepted;
      return s;
    }
  }
}

}  // namespace

double sample_xi_tilted(RngStream& rng, StableParams p, double b, double nu,
                        RejectionStats* stats) {
  detail::require(b >= 0.0, "tilt b must be nonnegative");
  detail::require(nu > 0.0, "nu must be positive");
  return xi_tilted(rng, p.alpha(), b, nu, stats);
}

double sample_xi_size_biased(RngStream& rng, StableParams p, double b, double nu,
                             RejectionStats* stats) {
  detail::require(b > 0.0, "size-biased xi law needs b > 0");
  detail::require(nu > 0.0, "nu must be positive");
  const double alpha = p.alpha();
  for (;;) {
    const double s = xi_tilted(rng, alpha, b, nu, stats);
    // accept with probability (1 + s/b)^{alpha-1}
    if (rng.uniform() < std::pow(1.0 + s / b, alpha - 1.0)) return s;
  }
}

double sample_xi(RngStream& rng, const XiLaw& law, RejectionStats* stats) {
  const CumulantModel& m = law.model();
  const double nu = law.nu();
  switch (m.family()) {
    case CumulantFamily::Gamma:
      return sample_gamma(rng, nu) / sample_gamma(rng, m.shape() - nu);
    case CumulantFamily::Stable: return xi_stable(rng, m.alpha(), nu);
    case CumulantFamily::TiltedStable: return xi_tilted(rng, m.alpha(), m.tilt(), nu, stats);
    case CumulantFamily::SizeBiasedTiltedStable:
      return sample_xi_size_biased(rng, StableParams(m.alpha()), m.tilt(), nu, stats);
    case CumulantFamily::GenericNumeric: return law.table()->sample(rng);
  }
  throw UnsupportedFamily("unknown cumulant family");
}

double sample_H(RngStream& rng, StableParams p, double theta) {
  const double alpha = p.alpha();
  detail::require(theta > -alpha, "theta must exceed -alpha");
  const double g = sample_gamma(rng, (theta + alpha) / alpha);
  const double beta = sample_beta(rng, 1.0 - alpha, theta + alpha);
  return std::pow(g, 1.0 / alpha) * beta;
}

XiHPair sample_xi_H_pair(RngStream& rng, StableParams p, double theta) {
  const double alpha = p.alpha();
  detail::require(theta > -alpha, "theta must exceed -alpha");
  const double scale = std::pow(sample_gamma(rng, (theta + alpha) / alpha), 1.0 / alpha);
  const BetaPair bp = sample_beta_pair(rng, theta + alpha, 1.0 - alpha);
  return {scale * bp.value, scale * bp.complement};
}

}  // namespace rscale
