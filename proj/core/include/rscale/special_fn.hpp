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
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rscale {

/// Index of a positive alpha-stable law, 0 < alpha < 1.
class StableParams {
 public:
  explicit StableParams(double alpha);
  double alpha() const noexcept { return alpha_; }

 private:
  double alpha_;
};

// ---------------------------------------------------------------------------
// Positive stable law with Laplace transform exp(-s^alpha).

/// Density f_alpha(t). Uses the closed form at alpha = 1/2, the large-t series
/// where it converges fast, and Zolotarev's integral otherwise. Returns 0 (not
/// NaN) once the value underflows. Throws DomainError for t <= 0.
double stable_density(StableParams p, double t);

/// Zolotarev single-integral evaluation for every alpha (no short cuts).
/// `error_estimate`, when given, receives the absolute quadrature error.
double stable_density_integral(StableParams p, double t, double* error_estimate = nullptr);

/// Distribution function P(S <= t).
double stable_cdf(StableParams p, double t);

/// log of Kanter's function
///   A(u) = sin(alpha u)^{alpha/(1-alpha)} sin((1-alpha) u) / sin(u)^{1/(1-alpha)}
/// on 0 < u < pi. S = (A(U)/E)^{(1-alpha)/alpha} with U uniform on (0, pi) and E
/// unit exponential is positive stable.
double log_kanter(double alpha, double u);

/// The alpha = 1/2 law in closed form: t^{-3/2} exp(-1/(4t)) / (2 sqrt(pi)).
double levy_half_density(double t);
/// P(S_{1/2} <= t) = erfc(1 / (2 sqrt(t))).
double levy_half_cdf(double t);

// ---------------------------------------------------------------------------
// Gamma and beta machinery.

/// Regularized lower incomplete gamma P(G_a <= x).
double gamma_cdf(double a, double x);
/// Unit-rate Gamma(a) density.
double gamma_density(double a, double x);
/// Regularized incomplete beta P(B_{a,b} <= x).
double beta_cdf(double a, double b, double x);
/// Lower incomplete gamma gamma(a, x) without normalization.
double lower_incomplete_gamma(double a, double x);

// ---------------------------------------------------------------------------
// Cumulant models: a positive scalar law T0 with psi(s) = -log E[exp(-s T0)].

enum class CumulantFamily { Gamma, Stable, TiltedStable, SizeBiasedTiltedStable, GenericNumeric };

std::string to_string(CumulantFamily f);

class CumulantModel {
 public:
  /// Gamma(a, 1): psi(s) = a log(1 + s).
  static CumulantModel gamma(double a);
  /// Positive stable: psi(s) = s^alpha.
  static CumulantModel stable(StableParams p);
  /// Exponentially tilted stable X_{alpha,b}: psi(s) = (b + s)^alpha - b^alpha.
  static CumulantModel tilted_stable(StableParams p, double b);
  /// Size-biased tilted stable: psi(s) = (1 - alpha) log(1 + s/b) + (b+s)^alpha - b^alpha.
  /// Requires b > 0.
  static CumulantModel size_biased_tilted_stable(StableParams p, double b);
  /// Cumulant given as a table on a grid starting at s = 0, interpolated by a
  /// monotone cubic (PCHIP) and extended linearly past the last node.
  /// `density` is optional; it is needed for conditional (tilted) sampling.
  static CumulantModel generic_numeric(std::vector<double> s_grid, std::vector<double> psi,
                                       std::function<double(double)> density = {});
  /// Tabulates `psi` on a log-spaced grid over [0, s_max].
  static CumulantModel tabulate(const std::function<double(double)>& psi,
                                std::function<double(double)> density = {}, double s_max = 1e6,
                                int points = 400);

  CumulantFamily family() const noexcept { return family_; }
  /// Shape of the Gamma family.
  double shape() const noexcept { return a_; }
  /// Stability index for the stable families.
  double alpha() const noexcept { return alpha_; }
  /// Exponential tilt b for the (size-biased) tilted stable families.
  double tilt() const noexcept { return b_; }

  double psi(double s) const;
  bool has_density() const;
  /// Density of T0; throws UnsupportedFamily when none is attached.
  double density(double t) const;

  /// Spot-checks psi(0) = 0, monotonicity and concavity on s in {0, 0.1, ..., 10}.
  bool cumulant_shape_ok() const;

  std::string describe() const;

 private:
  struct Table;
  struct MomentCache;

  CumulantModel();

  CumulantFamily family_ = CumulantFamily::Gamma;
  double a_ = 0.0;
  double alpha_ = 0.0;
  double b_ = 0.0;
  std::shared_ptr<const Table> table_;
  std::shared_ptr<MomentCache> cache_;

  friend double neg_moment(const CumulantModel& model, double nu);
};

/// psi(s) for `model`; s must be nonnegative.
double cumulant(const CumulantModel& model, double s);

/// E[T0^{-nu}], by closed form where available (Gamma, Stable) and otherwise by
/// quadrature of Gamma(nu)^{-1} int s^{nu-1} exp(-psi(s)) ds. Results are
/// cached per model. Throws NonIntegrable when the integral diverges.
double neg_moment(const CumulantModel& model, double nu);

/// Laplace-identity quadrature, bypassing closed forms and the cache.
double neg_moment_laplace(const CumulantModel& model, double nu);

// ---------------------------------------------------------------------------
// Levy densities of subordinators.

enum class LevyCase { InfiniteActivityGG, GammaProcess, CompoundPoisson, Custom };

std::string to_string(LevyCase c);

/// A Levy density on (0, inf). The closed-form family is
///   lambda(t) = scale * t^{-delta-1} * exp(-tilt * t),   delta < 1,
/// which covers the tilted stable densities (delta = alpha - nu) and the gamma
/// subordinator (delta = 0). Anything else is `custom` and uses quadrature.
class LevyDensityModel {
 public:
  static LevyDensityModel power_law(double scale, double delta, double tilt);
  static LevyDensityModel custom(std::function<double(double)> density, std::string name);
  /// Gamma subordinator density t^{-1} e^{-t}.
  static LevyDensityModel gamma_process();

  double density(double t) const;
  /// Psi(s) = int (1 - e^{-st}) lambda(t) dt; closed form when available.
  double exponent(double s) const;
  /// Same integral by quadrature, regardless of closed forms.
  double exponent_quadrature(double s) const;
  /// int lambda(t) dt when finite (compound Poisson), else nullopt.
  std::optional<double> total_mass() const;
  /// int_0^x t lambda(t) dt.
  double small_jump_mass(double x) const;

  /// e^{-extra t} lambda(t).
  LevyDensityModel tilted(double extra) const;
  /// t^{nu} lambda(t).
  LevyDensityModel polynomially_tilted(double nu) const;

  bool closed_form() const noexcept { return !custom_; }
  double scale() const noexcept { return scale_; }
  double delta() const noexcept { return delta_; }
  double tilt() const noexcept { return tilt_; }
  LevyCase levy_case() const noexcept;
  const std::string& name() const noexcept { return name_; }

 private:
  LevyDensityModel() = default;

  double scale_ = 0.0;
  double delta_ = 0.0;
  double tilt_ = 0.0;
  std::function<double(double)> custom_;
  std::string name_;
};

double levy_exponent(const LevyDensityModel& model, double s);

/// Closed-form exponent of scale * t^{-delta-1} e^{-tilt t} at s (delta < 1).
double power_law_exponent(double scale, double delta, double tilt, double s);

}  // namespace rscale
