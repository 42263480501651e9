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

#include <cmath>
#include <limits>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "rscale/error.hpp"

namespace rscale::quad {

/// Value and absolute error estimate of a quadrature.
struct Result {
  double value = 0.0;
  double error = 0.0;
};

/// Convergence gate shared by every integral in the library.
inline constexpr double kAbsTol = 1e-10;
inline constexpr double kRelTol = 1e-8;

inline bool converged(const Result& r) {
  return std::isfinite(r.value) && r.error <= std::max(kAbsTol, kRelTol * std::abs(r.value));
}

inline const Result& checked(const Result& r, const char* what) {
  if (!converged(r)) throw NumericalError(what, r.error);
  return r;
}

/// Adaptive Gauss-Kronrod (15-point) on a finite interval.
template <class F>
Result finite(F&& f, double a, double b, double rel_tol = 1e-12, unsigned max_depth = 20) {
  Result r;
  r.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, max_depth, rel_tol,
                                                                          &r.error);
  return r;
}

/// Integral over [a, b] with integrable endpoint singularities (tanh-sinh).
template <class F>
Result singular(F&& f, double a, double b, double rel_tol = 1e-12) {
  static thread_local boost::math::quadrature::tanh_sinh<double> integrator;
  Result r;
  double l1 = 0.0;
  r.value = integrator.integrate(f, a, b, rel_tol, &r.error, &l1);
  return r;
}

/// Integral over [a, infinity) (exp-sinh).
template <class F>
Result to_infinity(F&& f, double a, double rel_tol = 1e-12) {
  static thread_local boost::math::quadrature::exp_sinh<double> integrator;
  Result r;
  double l1 = 0.0;
  r.value = integrator.integrate(f, a, std::numeric_limits<double>::infinity(), rel_tol, &r.error, &l1);
  return r;
}

/// Integral over (0, infinity): tanh-sinh on (0, split], exp-sinh beyond.
template <class F>
Result positive_axis(F&& f, double split = 1.0, double rel_tol = 1e-12) {
  const Result head = singular(f, 0.0, split, rel_tol);
  const Result tail = to_infinity(f, split, rel_tol);
  return {head.value + tail.value, head.error + tail.error};
}

}  // namespace rscale::quad
