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

#include "rscale/special_fn.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

// pchip.hpp calls isnan unqualified.
using std::isnan;
#include <boost/math/interpolators/pchip.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "rscale/error.hpp"
#include "rscale/quadrature.hpp"

namespace rscale {
namespace {

constexpr double kPi = std::numbers::pi;

// Below this value of t^{-alpha} the large-t series converges in a handful of terms.
constexpr double kSeriesThreshold = 0.1;

// sum_{k>=1} (-1)^{k+1} c_k sin(k pi alpha) y^k with c_k = exp(lgamma(k alpha + shift) - lgamma(k+1)).
double stable_series(double alpha, double y, double shift) {
  double sum = 0.0;
  const double log_y = std::log(y);
  for (int k = 1; k <= 400; ++k) {
    const double log_c = std::lgamma(k * alpha + shift) - std::lgamma(k + 1.0) + k * log_y;
    const double term = std::exp(log_c) * std::sin(k * kPi * alpha);
    sum += (k % 2 == 1) ? term : -term;
    if (std::exp(log_c) < 1e-18 * std::abs(sum) && k > 2) break;
  }
  return sum;
}

}  // namespace

double log_kanter(double alpha, double u) {
  const double beta = 1.0 - alpha;
  const double su = u > 0.5 * kPi ? std::sin(kPi - u) : std::sin(u);
  return alpha / beta * std::log(std::sin(alpha * u)) + std::log(std::sin(beta * u)) -
         std::log(su) / beta;
}

StableParams::StableParams(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) detail::domain_fail("alpha must lie in (0, 1)");
}

// ---------------------------------------------------------------------------

double levy_half_density(double t) {
  detail::require(t > 0.0, "stable density needs t > 0");
  return std::exp(-1.5 * std::log(t) - 0.25 / t) / (2.0 * std::sqrt(kPi));
}

double levy_half_cdf(double t) {
  if (t <= 0.0) return 0.0;
  return std::erfc(0.5 / std::sqrt(t));
}

double stable_density_integral(StableParams p, double t, double* error_estimate) {
  detail::require(t > 0.0, "stable density needs t > 0");
  const double alpha = p.alpha();
  const double beta = 1.0 - alpha;
  const double log_x = -alpha / beta * std::log(t);
  auto integrand = [&](double u) {
    if (u <= 0.0 || u >= kPi) return 0.0;
    const double log_z = log_kanter(alpha, u) + log_x;
    if (log_z > 6.6) return 0.0;  // z e^{-z} < 1e-300
    const double z = std::exp(log_z);
    return z * std::exp(-z);
  };
  const quad::Result r = quad::finite(integrand, 0.0, kPi, 1e-13, 30);
  const double scale = alpha / (beta * kPi * t);
  if (error_estimate) *error_estimate = r.error * scale;
  if (!std::isfinite(r.value)) throw NumericalError("stable density quadrature failed", r.error);
  return std::max(0.0, r.value * scale);
}

double stable_density(StableParams p, double t) {
  detail::require(t > 0.0, "stable density needs t > 0");
  const double alpha = p.alpha();
  if (alpha == 0.5) return levy_half_density(t);
  const double y = std::pow(t, -alpha);
  if (y <= kSeriesThreshold) return std::max(0.0, stable_series(alpha, y, 1.0) / (kPi * t));
  return stable_density_integral(p, t);
}

double stable_cdf(StableParams p, double t) {
  if (t <= 0.0) return 0.0;
  const double alpha = p.alpha();
  if (alpha == 0.5) return levy_half_cdf(t);
  const double y = std::pow(t, -alpha);
  if (y <= kSeriesThreshold) return std::clamp(1.0 - stable_series(alpha, y, 0.0) / kPi, 0.0, 1.0);
  const double beta = 1.0 - alpha;
  const double log_x = -alpha / beta * std::log(t);
  auto integrand = [&](double u) {
    if (u <= 0.0 || u >= kPi) return 0.0;
    const double log_z = log_kanter(alpha, u) + log_x;
    if (log_z > 6.6) return 0.0;
    return std::exp(-std::exp(log_z));
  };
  const quad::Result r = quad::finite(integrand, 0.0, kPi, 1e-13, 30);
  return std::clamp(r.value / kPi, 0.0, 1.0);
}

// ---------------------------------------------------------------------------

double gamma_cdf(double a, double x) {
  detail::require(a > 0.0, "gamma shape must be positive");
  detail::require(x >= 0.0 || std::isinf(x), "gamma_cdf needs x >= 0");
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  return boost::math::gamma_p(a, x);
}

double gamma_density(double a, double x) {
  detail::require(a > 0.0, "gamma shape must be positive");
  if (x <= 0.0) return 0.0;
  return boost::math::gamma_p_derivative(a, x);
}

double beta_cdf(double a, double b, double x) {
  detail::require(a > 0.0 && b > 0.0, "beta parameters must be positive");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return boost::math::ibeta(a, b, x);
}

double lower_incomplete_gamma(double a, double x) {
  detail::require(a > 0.0 && x >= 0.0, "lower incomplete gamma domain");
  if (x == 0.0) return 0.0;
  return boost::math::tgamma_lower(a, x);
}

// ---------------------------------------------------------------------------

std::string to_string(CumulantFamily f) {
  switch (f) {
    case CumulantFamily::Gamma: return "gamma";
    case CumulantFamily::Stable: return "stable";
    case CumulantFamily::TiltedStable: return "tilted-stable";
    case CumulantFamily::SizeBiasedTiltedStable: return "size-biased-tilted-stable";
    case CumulantFamily::GenericNumeric: return "generic-numeric";
  }
  return "unknown";
}

struct CumulantModel::Table {
  std::vector<double> s;
  std::vector<double> psi;
  boost::math::interpolators::pchip<std::vector<double>> spline;
  double tail_slope;
  std::function<double(double)> density;

  Table(std::vector<double> s_in, std::vector<double> psi_in, std::function<double(double)> dens)
      : s(s_in),
        psi(psi_in),
        spline(std::move(s_in), std::move(psi_in)),
        tail_slope(0.0),
        density(std::move(dens)) {
    const std::size_t n = s.size();
    tail_slope = std::max(0.0, (psi[n - 1] - psi[n - 2]) / (s[n - 1] - s[n - 2]));
  }

  double operator()(double x) const {
    if (x >= s.back()) return psi.back() + tail_slope * (x - s.back());
    return spline(x);
  }
};

struct CumulantModel::MomentCache {
  std::mutex mutex;
  std::map<double, double> values;
};

CumulantModel::CumulantModel() : cache_(std::make_shared<MomentCache>()) {}

CumulantModel CumulantModel::gamma(double a) {
  detail::require(a > 0.0, "gamma shape must be positive");
  CumulantModel m;
  m.family_ = CumulantFamily::Gamma;
  m.a_ = a;
  return m;
}

CumulantModel CumulantModel::stable(StableParams p) {
  CumulantModel m;
  m.family_ = CumulantFamily::Stable;
  m.alpha_ = p.alpha();
  return m;
}

CumulantModel CumulantModel::tilted_stable(StableParams p, double b) {
  detail::require(b >= 0.0, "tilt b must be nonnegative");
  CumulantModel m;
  m.family_ = CumulantFamily::TiltedStable;
  m.alpha_ = p.alpha();
  m.b_ = b;
  return m;
}

CumulantModel CumulantModel::size_biased_tilted_stable(StableParams p, double b) {
  if (!(b > 0.0)) detail::domain_fail("size-biased family needs b > 0 (log singularity at b = 0)");
  CumulantModel m;
  m.family_ = CumulantFamily::SizeBiasedTiltedStable;
  m.alpha_ = p.alpha();
  m.b_ = b;
  return m;
}

CumulantModel CumulantModel::generic_numeric(std::vector<double> s_grid, std::vector<double> psi,
                                             std::function<double(double)> density) {
  detail::require(s_grid.size() == psi.size(), "cumulant table sizes differ");
  detail::require(s_grid.size() >= 4, "cumulant table needs at least four nodes");
  detail::require(s_grid.front() == 0.0, "cumulant table must start at s = 0");
  detail::require(psi.front() == 0.0, "cumulant table must have psi(0) = 0");
  for (std::size_t i = 1; i < s_grid.size(); ++i) {
    detail::require(s_grid[i] > s_grid[i - 1], "cumulant grid must be strictly increasing");
    detail::require(psi[i] >= psi[i - 1], "cumulant values must be nondecreasing");
  }
  CumulantModel m;
  m.family_ = CumulantFamily::GenericNumeric;
  m.table_ = std::make_shared<const Table>(std::move(s_grid), std::move(psi), std::move(density));
  return m;
}

CumulantModel CumulantModel::tabulate(const std::function<double(double)>& psi,
                                      std::function<double(double)> density, double s_max,
                                      int points) {
  detail::require(s_max > 1e-6 && points >= 8, "tabulation needs s_max > 1e-6 and >= 8 points");
  std::vector<double> s{0.0};
  std::vector<double> v{0.0};
  const double lo = std::log(1e-6);
  const double hi = std::log(s_max);
  for (int i = 0; i < points; ++i) {
    const double x = std::exp(lo + (hi - lo) * i / (points - 1));
    s.push_back(x);
    v.push_back(psi(x));
  }
  return generic_numeric(std::move(s), std::move(v), std::move(density));
}

double CumulantModel::psi(double s) const {
  detail::require(s >= 0.0, "cumulant needs s >= 0");
  switch (family_) {
    case CumulantFamily::Gamma: return a_ * std::log1p(s);
    case CumulantFamily::Stable: return std::pow(s, alpha_);
    case CumulantFamily::TiltedStable: return std::pow(b_ + s, alpha_) - std::pow(b_, alpha_);
    case CumulantFamily::SizeBiasedTiltedStable:
      return (1.0 - alpha_) * std::log1p(s / b_) + std::pow(b_ + s, alpha_) - std::pow(b_, alpha_);
    case CumulantFamily::GenericNumeric: return (*table_)(s);
  }
  return 0.0;
}

bool CumulantModel::has_density() const {
  return family_ != CumulantFamily::GenericNumeric || static_cast<bool>(table_->density);
}

double CumulantModel::density(double t) const {
  if (t <= 0.0) return 0.0;
  switch (family_) {
    case CumulantFamily::Gamma: return gamma_density(a_, t);
    case CumulantFamily::Stable: return stable_density(StableParams(alpha_), t);
    case CumulantFamily::TiltedStable: {
      const double f = stable_density(StableParams(alpha_), t);
      return f == 0.0 ? 0.0 : f * std::exp(-b_ * t + std::pow(b_, alpha_));
    }
    case CumulantFamily::SizeBiasedTiltedStable: {
      const double f = stable_density(StableParams(alpha_), t);
      if (f == 0.0) return 0.0;
      return std::pow(b_, 1.0 - alpha_) * std::exp(-b_ * t + std::pow(b_, alpha_)) * t * f / alpha_;
    }
    case CumulantFamily::GenericNumeric:
      if (!table_->density) throw UnsupportedFamily("generic cumulant model has no density attached");
      return table_->density(t);
  }
  return 0.0;
}

bool CumulantModel::cumulant_shape_ok() const {
  std::vector<double> v;
  for (int i = 0; i <= 100; ++i) v.push_back(psi(0.1 * i));
  if (v[0] != 0.0) return false;
  const double tol = 1e-12;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] < v[i - 1] - tol) return false;
  for (std::size_t i = 1; i + 1 < v.size(); ++i)
    if (v[i + 1] - 2.0 * v[i] + v[i - 1] > tol * (1.0 + std::abs(v[i]))) return false;
  return true;
}

std::string CumulantModel::describe() const {
  std::ostringstream os;
  os << to_string(family_);
  switch (family_) {
    case CumulantFamily::Gamma: os << "(a=" << a_ << ")"; break;
    case CumulantFamily::Stable: os << "(alpha=" << alpha_ << ")"; break;
    case CumulantFamily::TiltedStable:
    case CumulantFamily::SizeBiasedTiltedStable:
      os << "(alpha=" << alpha_ << ",b=" << b_ << ")";
      break;
    case CumulantFamily::GenericNumeric: os << "(nodes=" << table_->s.size() << ")"; break;
  }
  return os.str();
}

double cumulant(const CumulantModel& model, double s) { return model.psi(s); }

namespace {

// Local log-slope of s^nu exp(-psi(s)) far out; nonnegative slope means divergence.
bool laplace_integral_diverges(const CumulantModel& model, double nu) {
  const double s1 = 1e6;
  const double s2 = 1e8;
  const double l1 = nu * std::log(s1) - model.psi(s1);
  const double l2 = nu * std::log(s2) - model.psi(s2);
  return (l2 - l1) / std::log(s2 / s1) > -0.02;
}

}  // namespace

double neg_moment_laplace(const CumulantModel& model, double nu) {
  detail::require(nu > 0.0, "nu must be positive");
  if (laplace_integral_diverges(model, nu))
    throw NonIntegrable("E[T0^-nu] is infinite for " + model.describe());
  auto integrand = [&](double s) {
    if (s <= 0.0) return 0.0;
    return std::exp((nu - 1.0) * std::log(s) - model.psi(s));
  };
  const quad::Result r = quad::positive_axis(integrand);
  quad::checked(r, "negative moment quadrature did not converge");
  return r.value / std::tgamma(nu);
}

double neg_moment(const CumulantModel& model, double nu) {
  detail::require(nu > 0.0, "nu must be positive");
  {
    std::lock_guard<std::mutex> lock(model.cache_->mutex);
    auto it = model.cache_->values.find(nu);
    if (it != model.cache_->values.end()) return it->second;
  }
  double value = 0.0;
  switch (model.family()) {
    case CumulantFamily::Gamma:
      if (nu >= model.shape())
        throw NonIntegrable("E[G_a^-nu] is infinite for nu >= a");
      value = std::exp(std::lgamma(model.shape() - nu) - std::lgamma(model.shape()));
      break;
    case CumulantFamily::Stable:
      value = std::tgamma(nu / model.alpha()) / (model.alpha() * std::tgamma(nu));
      break;
    case CumulantFamily::TiltedStable:
      value = model.tilt() == 0.0
                  ? std::tgamma(nu / model.alpha()) / (model.alpha() * std::tgamma(nu))
                  : neg_moment_laplace(model, nu);
      break;
    default: value = neg_moment_laplace(model, nu); break;
  }
  std::lock_guard<std::mutex> lock(model.cache_->mutex);
  model.cache_->values.emplace(nu, value);
  return value;
}

// ---------------------------------------------------------------------------

std::string to_string(LevyCase c) {
  switch (c) {
    case LevyCase::InfiniteActivityGG: return "InfiniteActivityGG";
    case LevyCase::GammaProcess: return "GammaProcess";
    case LevyCase::CompoundPoisson: return "CompoundPoisson";
    case LevyCase::Custom: return "Custom";
  }
  return "Unknown";
}

LevyDensityModel LevyDensityModel::power_law(double scale, double delta, double tilt) {
  detail::require(scale > 0.0, "Levy density scale must be positive");
  detail::require(delta < 1.0, "Levy density needs delta < 1 (integrability of min(1,t) lambda at 0)");
  detail::require(tilt >= 0.0, "Levy density tilt must be nonnegative");
  if (tilt == 0.0 && delta <= 0.0)
    detail::domain_fail("Levy density with delta <= 0 needs a positive tilt (divergent at infinity)");
  LevyDensityModel m;
  m.scale_ = scale;
  m.delta_ = delta;
  m.tilt_ = tilt;
  std::ostringstream os;
  os << "power-law(scale=" << scale << ",delta=" << delta << ",tilt=" << tilt << ")";
  m.name_ = os.str();
  return m;
}

LevyDensityModel LevyDensityModel::custom(std::function<double(double)> density, std::string name) {
  detail::require(static_cast<bool>(density), "custom Levy density must be callable");
  LevyDensityModel m;
  m.custom_ = std::move(density);
  m.name_ = std::move(name);
  return m;
}

LevyDensityModel LevyDensityModel::gamma_process() { return power_law(1.0, 0.0, 1.0); }

double LevyDensityModel::density(double t) const {
  if (t <= 0.0) return 0.0;
  if (custom_) return custom_(t);
  return scale_ * std::exp(-(delta_ + 1.0) * std::log(t) - tilt_ * t);
}

double LevyDensityModel::exponent(double s) const {
  detail::require(s >= 0.0, "Levy exponent needs s >= 0");
  if (s == 0.0) return 0.0;
  if (custom_) return exponent_quadrature(s);
  return power_law_exponent(scale_, delta_, tilt_, s);
}

double power_law_exponent(double scale, double delta, double tilt, double s) {
  if (s == 0.0) return 0.0;
  if (tilt == 0.0) return scale * std::tgamma(1.0 - delta) * std::pow(s, delta) / delta;
  const double l = std::log1p(s / tilt);
  if (delta == 0.0) return scale * l;
  return scale * std::tgamma(1.0 - delta) * std::pow(tilt, delta) * std::expm1(delta * l) / delta;
}

double LevyDensityModel::exponent_quadrature(double s) const {
  detail::require(s >= 0.0, "Levy exponent needs s >= 0");
  if (s == 0.0) return 0.0;
  // tanh-sinh probes points near 1e-300 where the density overflows; the mass
  // below 1e-100 is negligible for any integrable small-jump singularity.
  auto integrand = [&](double t) { return t <= 1e-100 ? 0.0 : -std::expm1(-s * t) * density(t); };
  const quad::Result r = quad::positive_axis(integrand);
  if (!std::isfinite(r.value)) throw NonIntegrable("Levy exponent integral diverges for " + name_);
  quad::checked(r, "Levy exponent quadrature did not converge");
  return r.value;
}

std::optional<double> LevyDensityModel::total_mass() const {
  if (custom_) {
    auto f = [&](double t) { return density(t); };
    try {
      const quad::Result r = quad::positive_axis(f);
      if (quad::converged(r)) return r.value;
    } catch (const std::exception&) {
    }
    return std::nullopt;
  }
  if (delta_ >= 0.0) return std::nullopt;
  return scale_ * std::tgamma(-delta_) * std::pow(tilt_, delta_);
}

double LevyDensityModel::small_jump_mass(double x) const {
  detail::require(x >= 0.0, "small jump mass needs x >= 0");
  if (x == 0.0) return 0.0;
  if (custom_) {
    auto f = [&](double t) { return t * density(t); };
    return quad::checked(quad::singular(f, 0.0, x), "small jump mass quadrature").value;
  }
  const double a = 1.0 - delta_;
  if (tilt_ == 0.0) return scale_ * std::pow(x, a) / a;
  return scale_ * std::pow(tilt_, -a) * lower_incomplete_gamma(a, tilt_ * x);
}

LevyDensityModel LevyDensityModel::tilted(double extra) const {
  detail::require(extra >= 0.0, "tilt must be nonnegative");
  if (!custom_) return power_law(scale_, delta_, tilt_ + extra);
  auto base = custom_;
  return custom([base, extra](double t) { return std::exp(-extra * t) * base(t); },
                name_ + "*exp(-" + std::to_string(extra) + "t)");
}

LevyDensityModel LevyDensityModel::polynomially_tilted(double nu) const {
  if (!custom_) return power_law(scale_, delta_ - nu, tilt_);
  auto base = custom_;
  return custom([base, nu](double t) { return std::pow(t, nu) * base(t); },
                name_ + "*t^" + std::to_string(nu));
}

LevyCase LevyDensityModel::levy_case() const noexcept {
  if (custom_) return LevyCase::Custom;
  if (delta_ > 0.0) return LevyCase::InfiniteActivityGG;
  if (delta_ == 0.0) return LevyCase::GammaProcess;
  return LevyCase::CompoundPoisson;
}

double levy_exponent(const LevyDensityModel& model, double s) { return model.exponent(s); }

}  // namespace rscale
