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


#include "rscale/couplings.hpp"

#include <algorithm>
#include <cmath>

#include "rscale/error.hpp"
#include "rscale/numeric_distribution.hpp"
#include "rscale/parallel.hpp"

namespace rscale {

double sample_exponential_tilt(RngStream& rng, const CumulantModel& model, double s,
                               RejectionStats* stats) {
  detail::require(s >= 0.0, "tilt must be nonnegative");
  switch (model.family()) {
    case CumulantFamily::Gamma: return sample_gamma(rng, model.shape()) / (1.0 + s);
    case CumulantFamily::Stable:
    case CumulantFamily::TiltedStable:
      return sample_tilted_stable(rng, StableParams(model.alpha()), model.tilt() + s, stats);
    case CumulantFamily::SizeBiasedTiltedStable: {
      const double c = model.tilt() + s;
      const double x = sample_tilted_stable(rng, StableParams(model.alpha()), c, stats);
      return x + sample_gamma(rng, 1.0 - model.alpha()) / c;
    }
    case CumulantFamily::GenericNumeric: {
      if (!model.has_density())
        throw UnsupportedFamily("exponential tilt of a generic model needs its density");
      const NumericDistribution tilted(
          [&model, s](double t) { return std::exp(-s * t) * model.density(t); });
      return tilted.sample(rng);
    }
  }
  throw UnsupportedFamily("unknown cumulant family");
}

ScalarCoupling couple_scalar(RngStream& rng, const XiLaw& law, RejectionStats* stats) {
  ScalarCoupling c;
  c.family = law.model().family();
  c.seed = rng.seed();
  c.stream_id = rng.stream_id();
  c.xi = sample_xi(rng, law, stats);
  c.T = sample_exponential_tilt(rng, law.model(), c.xi, stats);
  return c;
}

ScalarCoupling couple_scalar(RngStream& rng, const CumulantModel& model, double nu) {
  const XiLaw law(model, nu);
  return couple_scalar(rng, law);
}

namespace {

MeasureCoupling finish(double xi, JumpMeasure m) {
  MeasureCoupling c;
  c.xi = xi;
  c.T = m.total_mass;
  c.weights = normalize(m);
  c.measure = std::move(m);
  return c;
}

}  // namespace

MeasureCoupling couple_gg_measure(RngStream& rng, StableParams p, double b, double nu,
                                  double truncation) {
  const double xi = sample_xi_tilted(rng, p, b, nu);
  return finish(xi, sample_gg_measure(rng, p, b + xi, truncation));
}

MeasureCoupling couple_size_biased(RngStream& rng, StableParams p, double b, double nu,
                                   double truncation) {
  const double xi = sample_xi_size_biased(rng, p, b, nu);
  return finish(xi, bridge_measure(rng, p, b + xi, truncation));
}

RandomScalingDraw random_scaling_draw(RngStream& rng, StableParams p, double b) {
  detail::require(b > 0.0, "random scaling needs b > 0");
  const double alpha = p.alpha();
  const double z_alpha = sample_gamma(rng, 1.0) + std::pow(b, alpha);
  const double z = std::pow(z_alpha, 1.0 / alpha);
  const double time = z_alpha + sample_gamma(rng, (1.0 - alpha) / alpha);
  RandomScalingDraw d;
  d.scaled = sample_gg_subordinator(rng, p, time) / z;
  d.decoupled = (z - b) * d.scaled;
  return d;
}

PdBridgeDraw couple_pd_bridge(RngStream& rng, StableParams p, double theta, double truncation) {
  const XiHPair pair = sample_xi_H_pair(rng, p, theta);
  PdBridgeDraw d;
  d.xi_H = pair.xi;
  d.H = pair.H;
  const JumpMeasure m = bridge_measure(rng, p, d.tilt(), truncation);
  d.T = m.total_mass;
  d.weights = normalize(m);
  return d;
}

XiHPair sample_xi_H_mixture(RngStream& rng, StableParams p, double theta) {
  const double h = sample_H(rng, p, theta);
  return {sample_xi_size_biased(rng, p, h, theta + p.alpha()), h};
}

StableGammaDraw stable_gamma_draw(RngStream& rng, StableParams p, double theta) {
  detail::require(theta > 0.0, "theta must be positive");
  StableGammaDraw d;
  d.zeta = sample_gamma(rng, theta / p.alpha());
  d.total = sample_gg_subordinator(rng, p, d.zeta);
  d.partial = d.total;
  d.scaled = d.total / std::pow(d.zeta, 1.0 / p.alpha());
  return d;
}

StableGammaDraw stable_gamma_path_draw(RngStream& rng, StableParams p, double theta, double y) {
  detail::require(theta > 0.0, "theta must be positive");
  detail::require(y >= 0.0 && y <= 1.0, "path time fraction must lie in [0, 1]");
  StableGammaDraw d;
  d.zeta = sample_gamma(rng, theta / p.alpha());
  d.partial = sample_gg_subordinator(rng, p, y * d.zeta);
  d.total = d.partial + sample_gg_subordinator(rng, p, (1.0 - y) * d.zeta);
  d.scaled = d.total / std::pow(d.zeta, 1.0 / p.alpha());
  return d;
}

std::vector<StatReport> stable_gamma_algebra_check(std::uint64_t seed, StableParams p, double theta,
                                                   double y, std::size_t n, double level,
                                                   unsigned workers) {
  std::vector<double> total(n);
  std::vector<double> scaled(n);
  std::vector<double> path_total(n);
  std::vector<double> fraction(n);
  parallel_for(n, workers, [&](std::size_t r) {
    RngStream rng(seed, r);
    const StableGammaDraw d = stable_gamma_draw(rng, p, theta);
    total[r] = d.total;
    scaled[r] = d.scaled;
    RngStream path_rng(seed, r);  // same stream: y = 1 repeats the scalar draw
    const StableGammaDraw q = stable_gamma_path_draw(path_rng, p, theta, y);
    path_total[r] = q.total;
    fraction[r] = q.partial / q.total;
  });
  const std::size_t n_ind = std::min<std::size_t>(n, 2000);
  PermutationOptions perm;
  perm.seed = seed;
  perm.workers = workers;

  std::vector<StatReport> out;
  StatReport r = ks_one_sample(total, [theta](double x) { return gamma_cdf(theta, std::max(x, 0.0)); }, level);
  r.claim = "tau(zeta) ~ Gamma(theta)";
  out.push_back(r);

  r = independence_test(std::vector<double>(scaled.begin(), scaled.begin() + n_ind),
                        std::vector<double>(total.begin(), total.begin() + n_ind), perm, level);
  r.claim = "tau(zeta)/zeta^(1/alpha) independent of tau(zeta)";
  out.push_back(r);

  const double alpha = p.alpha();
  const NumericDistribution target([alpha, theta](double t) {
    return std::exp(-theta * std::log(t)) * stable_density(StableParams(alpha), t);
  });
  r = ks_one_sample(scaled, [&target](double x) { return target.cdf(x); }, level);
  r.claim = "tau(zeta)/zeta^(1/alpha) ~ polynomially tilted stable";
  out.push_back(r);

  r = ks_one_sample(path_total, [theta](double x) { return gamma_cdf(theta, std::max(x, 0.0)); }, level);
  r.claim = "split path tau(y zeta) + increment ~ Gamma(theta)";
  out.push_back(r);

  if (y > 0.0 && y < 1.0) {
    r = independence_test(std::vector<double>(fraction.begin(), fraction.begin() + n_ind),
                          std::vector<double>(path_total.begin(), path_total.begin() + n_ind), perm, level);
    r.claim = "tau(y zeta)/tau(zeta) independent of tau(zeta)";
    out.push_back(r);
  }
  for (StatReport& s : out) s.seed = seed;
  return out;
}

FactorizationReport factorization_check(const CumulantModel& model, double nu,
                                        const std::vector<double>& s_grid,
                                        const std::vector<double>& t_grid) {
  if (model.family() != CumulantFamily::Gamma)
    throw UnsupportedFamily("factorization check needs the Gamma family (closed form)");
  const double a = model.shape();
  const double moment = neg_moment_laplace(model, nu);  // quadrature route on purpose
  FactorizationReport rep;
  auto rel = [](double x, double y) { return std::abs(x - y) / std::max(std::abs(y), 1e-300); };
  for (double s : s_grid) {
    const double xi_density = std::exp(-model.psi(s) + (nu - 1.0) * std::log(s)) / (moment * std::tgamma(nu));
    for (double t : t_grid) {
      const double tilted = std::exp(-s * t + model.psi(s)) * model.density(t);
      const double conditional_route = xi_density * tilted;
      const double marginal = std::exp(-nu * std::log(t)) * model.density(t) / moment;
      const double marginal_route = marginal * t * gamma_density(nu, s * t);
      const double closed = std::exp((nu - 1.0) * std::log(s) + (a - 1.0) * std::log(t) - (1.0 + s) * t -
                                     std::lgamma(a - nu) - std::lgamma(nu));
      rep.max_rel_conditional_vs_marginal =
          std::max(rep.max_rel_conditional_vs_marginal, rel(conditional_route, marginal_route));
      rep.max_rel_conditional_vs_closed =
          std::max(rep.max_rel_conditional_vs_closed, rel(conditional_route, closed));
      ++rep.points;
    }
  }
  return rep;
}

}  // namespace rscale
