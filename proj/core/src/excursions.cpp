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


#include "rscale/excursions.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "rscale/error.hpp"
#include "rscale/samplers.hpp"

namespace rscale {

ThreeCaseModel three_case_model(double alpha, double nu, double b) {
  const StableParams p(alpha);
  detail::require(nu > 0.0, "nu must be positive");
  detail::require(b >= 0.0, "b must be nonnegative");
  const double delta = p.alpha() - nu;
  if (delta <= 0.0 && b == 0.0) detail::domain_fail("delta <= 0 needs b > 0");
  const double kappa = alpha / std::tgamma(1.0 - alpha);
  ThreeCaseModel out{LevyDensityModel::power_law(kappa, delta, b), LevyCase::Custom, delta, {}};
  out.tag = out.model.levy_case();
  std::ostringstream os;
  os.precision(12);
  switch (out.tag) {
    case LevyCase::InfiniteActivityGG:
      os << "generalized gamma subordinator with index " << delta << ", time scaled by "
         << alpha * std::tgamma(1.0 - delta) / (delta * std::tgamma(1.0 - alpha)) << " c^delta, divided by c";
      break;
    case LevyCase::GammaProcess:
      os << "gamma subordinator at time t*" << kappa << ", divided by c";
      break;
    case LevyCase::CompoundPoisson:
      os << "compound Poisson with rate " << alpha * std::tgamma(-delta) / std::tgamma(1.0 - alpha)
         << " c^" << delta << " and jumps Gamma(" << -delta << ")/c";
      break;
    case LevyCase::Custom: break;
  }
  out.representation = os.str();
  return out;
}

double straddle_duration_density(const LevyDensityModel& model, double t) {
  if (t <= 0.0) return 0.0;
  return -std::expm1(-t) * model.density(t) / model.exponent(1.0);
}

double straddle_joint_density(const LevyDensityModel& model, double overshoot, double undershoot) {
  if (overshoot <= 0.0 || undershoot <= 0.0) return 0.0;
  return std::exp(-undershoot) * model.density(overshoot + undershoot) / model.exponent(1.0);
}

ExcursionSampler::ExcursionSampler(LevyDensityModel model) : model_(std::move(model)) {
  const double psi1 = model_.exponent(1.0);
  if (!(psi1 > 0.0 && std::isfinite(psi1))) throw NonIntegrable("Psi(1) is not finite and positive");
  const LevyDensityModel m = model_;
  duration_ = std::make_shared<const NumericDistribution>(
      [m](double t) { return -std::expm1(-t) * m.density(t); });
}

ExcursionTriple ExcursionSampler::sample(RngStream& rng) const {
  return split_duration(rng, duration_->sample(rng));
}

ExcursionTriple split_duration(RngStream& rng, double duration) {
  detail::require(duration > 0.0, "duration must be positive");
  // unit exponential truncated to (0, duration)
  double u = -std::log1p(rng.uniform() * std::expm1(-duration));
  if (!(u < duration)) u = std::nextafter(duration, 0.0);
  u = std::max(u, std::numeric_limits<double>::min());
  ExcursionTriple e;
  e.undershoot = u;
  e.overshoot = duration - u;
  e.duration = e.overshoot + e.undershoot;
  return e;
}

ExcursionTriple sample_excursion_direct(RngStream& rng, const ExcursionSampler& sampler) {
  return sampler.sample(rng);
}

ExcursionTriple sample_excursion_path_oracle(RngStream& rng, const LevyDensityModel& model,
                                             double* local_time) {
  if (!model.closed_form() || model.delta() >= 0.0)
    throw UnsupportedFamily("path oracle needs a compound Poisson power-law density (delta < 0)");
  const double rate = *model.total_mass();
  if (!(rate > 0.0 && std::isfinite(rate))) throw DomainError("compound Poisson rate must be positive");
  const double level = rng.exponential();
  const double shape = -model.delta();
  double height = 0.0;
  double time = 0.0;
  for (std::size_t k = 0; k < 100'000'000; ++k) {
    time += rng.exponential() / rate;
    const double jump = sample_gamma(rng, shape) / model.tilt();
    if (height + jump > level) {
      if (local_time) *local_time = time;
      ExcursionTriple e;
      e.undershoot = level - height;
      e.overshoot = height + jump - level;
      e.duration = e.overshoot + e.undershoot;
      return e;
    }
    height += jump;
  }
  throw TruncationError("path oracle did not pass the exponential level");
}

// ---------------------------------------------------------------------------

namespace {

// Exponent at 1 of t^nu e^{-ct} base(t).
double tilted_exponent(const LevyDensityModel& base, double nu, double c) {
  if (base.closed_form()) return power_law_exponent(base.scale(), base.delta() - nu, base.tilt() + c, 1.0);
  return base.polynomially_tilted(nu).tilted(c).exponent(1.0);
}

}  // namespace

ExcursionCoupler::ExcursionCoupler(LevyDensityModel base, double b, double nu)
    : base_(std::move(base)), b_(b), nu_(nu) {
  detail::require(b >= 0.0, "b must be nonnegative");
  detail::require(nu > 0.0, "nu must be positive");
  normalizer_ = base_.tilted(b_).exponent(1.0);
  if (!(normalizer_ > 0.0 && std::isfinite(normalizer_)))
    throw NonIntegrable("Psi(b + 1) - Psi(b) is not finite and positive");
  const LevyDensityModel m = base_;
  const double b0 = b_;
  const double v = nu_;
  xi_ = std::make_shared<const NumericDistribution>(
      [m, b0, v](double s) { return tilted_exponent(m, v, b0 + s) * std::exp((v - 1.0) * std::log(s)); });
}

double ExcursionCoupler::psi_nu(double c) const { return tilted_exponent(base_, nu_, c); }

double ExcursionCoupler::xi_density(double s) const {
  if (s <= 0.0) return 0.0;
  return psi_nu(b_ + s) * std::exp((nu_ - 1.0) * std::log(s)) / (std::tgamma(nu_) * normalizer_);
}

double ExcursionCoupler::sample_duration(RngStream& rng, double s) const {
  if (base_.closed_form()) return sample_power_law_duration(rng, base_.delta() - nu_, base_.tilt() + b_ + s);
  const LevyDensityModel m = base_.polynomially_tilted(nu_).tilted(b_ + s);
  const NumericDistribution d([&m](double t) { return -std::expm1(-t) * m.density(t); });
  return d.sample(rng);
}

ExcursionCoupling ExcursionCoupler::sample(RngStream& rng) const {
  ExcursionCoupling c;
  c.xi = xi_->sample(rng);
  c.triple = split_duration(rng, sample_duration(rng, c.xi));
  return c;
}

ExcursionCoupling couple_excursion(RngStream& rng, const ExcursionCoupler& coupler) {
  return coupler.sample(rng);
}

double sample_power_law_duration(RngStream& rng, double delta, double c) {
  detail::require(delta < 1.0, "duration mixture needs delta < 1");
  detail::require(c >= 0.0, "tilt must be nonnegative");
  const double v = rng.uniform();
  double u;
  if (c == 0.0) {
    detail::require(delta > 0.0, "zero tilt needs delta > 0");
    u = std::pow(v, 1.0 / delta);
  } else if (delta == 0.0) {
    u = c * std::expm1(v * std::log1p(1.0 / c));
  } else {
    const double r = std::expm1(delta * std::log1p(1.0 / c));
    u = c * std::expm1(std::log1p(v * r) / delta);
  }
  return sample_gamma(rng, 1.0 - delta) / (c + u);
}

}  // namespace rscale
