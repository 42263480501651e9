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
#include <string>

#include "rscale/numeric_distribution.hpp"
#include "rscale/rng.hpp"
#include "rscale/special_fn.hpp"

namespace rscale {

/// Overshoot, undershoot and straddling duration at an independent unit
/// exponential time.
struct ExcursionTriple {
  double overshoot = 0.0;
  double undershoot = 0.0;
  double duration = 0.0;
};

struct ExcursionCoupling {
  double xi = 0.0;
  ExcursionTriple triple;

  double xi_duration() const noexcept { return xi * triple.duration; }
};

/// Levy density (alpha / Gamma(1-alpha)) t^{nu-alpha-1} e^{-bt}, delta = alpha - nu.
/// delta > 0: generalized gamma with infinite activity; delta = 0: gamma process
/// (needs b > 0); delta < 0: compound Poisson (needs b > 0).
struct ThreeCaseModel {
  LevyDensityModel model;
  LevyCase tag;
  double delta;
  /// The process the tilted density represents, in words.
  std::string representation;
};
ThreeCaseModel three_case_model(double alpha, double nu, double b);

/// Density of the straddling duration: (1 - e^{-t}) lambda(t) / Psi(1).
double straddle_duration_density(const LevyDensityModel& model, double t);

/// Joint density of (overshoot, undershoot) = (o, u): e^{-u} lambda(o + u) / Psi(1).
double straddle_joint_density(const LevyDensityModel& model, double overshoot, double undershoot);

/// Samples (O, U, Delta) through a numeric inverse CDF of the duration density
/// followed by U | Delta, a unit exponential truncated to (0, Delta).
/// The table is built once; sampling is thread-safe.
class ExcursionSampler {
 public:
  explicit ExcursionSampler(LevyDensityModel model);

  const LevyDensityModel& model() const noexcept { return model_; }
  ExcursionTriple sample(RngStream& rng) const;

 private:
  LevyDensityModel model_;
  std::shared_ptr<const NumericDistribution> duration_;
};

/// Splits a given duration into (overshoot, undershoot).
ExcursionTriple split_duration(RngStream& rng, double duration);

ExcursionTriple sample_excursion_direct(RngStream& rng, const ExcursionSampler& sampler);

/// Jump-by-jump passage of a compound Poisson subordinator over an independent
/// G_1 level. Only power-law models with delta < 0 qualify (jumps are
/// G_{-delta} / tilt). `local_time`, when given, receives the passage time.
ExcursionTriple sample_excursion_path_oracle(RngStream& rng, const LevyDensityModel& model,
                                             double* local_time = nullptr);

/// Couples the straddling duration of the tilted subordinator with a scaling
/// variable. xi has density Psi_nu(b + s) s^{nu-1} / (Gamma(nu) (Psi(b+1) - Psi(b))),
/// where Psi is the exponent of `base` and Psi_nu(c) is the exponent at 1 of
/// t^nu e^{-ct} base(t); then (O, U) come from the joint density of that tilted
/// density at c = b + xi.
class ExcursionCoupler {
 public:
  ExcursionCoupler(LevyDensityModel base, double b, double nu);

  double b() const noexcept { return b_; }
  double nu() const noexcept { return nu_; }
  /// Psi(b + 1) - Psi(b).
  double normalizer() const noexcept { return normalizer_; }
  /// Integral of the unnormalized xi density (should equal normalizer() Gamma(nu)).
  double xi_mass() const noexcept { return xi_->normalizer(); }
  double xi_density(double s) const;

  ExcursionCoupling sample(RngStream& rng) const;
  /// Duration given xi = s.
  double sample_duration(RngStream& rng, double s) const;

 private:
  double psi_nu(double c) const;

  LevyDensityModel base_;
  double b_;
  double nu_;
  double normalizer_;
  std::shared_ptr<const NumericDistribution> xi_;
};

ExcursionCoupling couple_excursion(RngStream& rng, const ExcursionCoupler& coupler);

/// Duration drawn exactly from (1 - e^{-t}) scale t^{-delta-1} e^{-ct}:
/// a mixture over u in [0, 1] with weight (c + u)^{delta - 1} of Gamma(1 - delta, rate c + u).
double sample_power_law_duration(RngStream& rng, double delta, double c);

}  // namespace rscale
