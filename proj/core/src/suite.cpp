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


#include "rscale/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>
#include <numbers>

#include "rscale/couplings.hpp"
#include "rscale/error.hpp"
#include "rscale/excursions.hpp"
#include "rscale/measures.hpp"
#include "rscale/numeric_distribution.hpp"
#include "rscale/parallel.hpp"
#include "rscale/quadrature.hpp"
#include "rscale/samplers.hpp"

namespace rscale {

bool CheckResult::pass() const {
  if (!within_budget()) return false;
  for (const ClaimResult& c : claims)
    if (c.gate && !c.pass()) return false;
  return true;
}

namespace {

// Stream tags; every kind of replicate draws from its own family of streams.
enum : std::uint64_t {
  kTagScalar = 0x1001,
  kTagGg = 0x1002,
  kTagStick = 0x1003,
  kTagSizeBiased = 0x1004,
  kTagTilted = 0x1005,
  kTagScaling = 0x1006,
  kTagBridge = 0x1007,
  kTagPairMix = 0x1008,
  kTagPairDirect = 0x1009,
  kTagCrp = 0x100a,
  kTagLimit = 0x100b,
  kTagExcursion = 0x100c,
  kTagDirect = 0x100d,
  kTagPath = 0x100e,
  kTagTiltedDirect = 0x100f,
  kTagExtended = 0x1010,
};

template <class T, class Fn>
std::vector<T> replicate(std::uint64_t seed, std::uint64_t tag, std::size_t n, unsigned workers, Fn&& fn) {
  std::vector<T> out(n);
  parallel_for(n, workers, [&](std::size_t r) {
    RngStream rng(seed, RngStream::derive_stream_id(tag, r));
    out[r] = fn(rng);
  });
  return out;
}

template <class T, class F>
std::vector<double> column(const std::vector<T>& v, F f, std::size_t limit = static_cast<std::size_t>(-1)) {
  std::vector<double> out;
  const std::size_t n = std::min(limit, v.size());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(f(v[i]));
  return out;
}

std::vector<double> head(const std::vector<double>& v, std::size_t n) {
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(n, v.size()))};
}

class Claims {
 public:
  void add(const std::string& label, StatReport r, std::uint64_t seed, bool gate = true) {
    r.claim = label;
    r.seed = seed;
    for (ClaimResult& c : claims_) {
      if (c.label == label) {
        c.runs.push_back(std::move(r));
        return;
      }
    }
    ClaimResult c;
    c.label = label;
    c.gate = gate;
    c.runs.push_back(std::move(r));
    claims_.push_back(std::move(c));
  }

  std::vector<ClaimResult> take() { return std::move(claims_); }

 private:
  std::vector<ClaimResult> claims_;
};

std::function<double(double)> gamma_cdf_of(double a) {
  return [a](double x) { return gamma_cdf(a, std::max(x, 0.0)); };
}

StatReport independence(const std::vector<double>& x, const std::vector<double>& y, const VerifyConfig& cfg,
                        std::uint64_t seed) {
  PermutationOptions opt;
  opt.permutations = cfg.permutations;
  opt.seed = seed;
  opt.workers = cfg.workers;
  const std::size_t n = std::min(cfg.n_pairs, x.size());
  return independence_test(head(x, n), head(y, n), opt, cfg.level);
}

StatReport tolerance(double statistic, double threshold) {
  StatReport r;
  r.test = TestKind::NumericTolerance;
  r.statistic = statistic;
  r.threshold = threshold;
  r.n = 1;
  r.pass = statistic <= threshold;
  return r;
}

std::vector<double> stick_breaking_leaders(std::uint64_t seed, double alpha, double theta, std::size_t n,
                                           unsigned workers) {
  StickBreakingOptions opt;
  opt.deficit_tolerance = 1e-3;
  return replicate<double>(seed, kTagStick, n, workers, [&](RngStream& rng) {
    return stick_breaking_pd(rng, alpha, theta, opt).leader();
  });
}

double mass_below_half(const JumpMeasure& m) {
  double s = 0.0;
  for (const Jump& j : m.jumps)
    if (j.location <= 0.5) s += j.size;
  return s / m.total_mass;
}

// Numeric law with density proportional to `density`, shared across workers.
std::shared_ptr<const NumericDistribution> numeric_law(std::function<double(double)> density) {
  return std::make_shared<const NumericDistribution>(std::move(density));
}

std::function<double(double)> cdf_of(const std::shared_ptr<const NumericDistribution>& d) {
  return [d](double x) { return d->cdf(x); };
}

// Keeps the gate on the listed labels only.
std::vector<ClaimResult> gate_only(std::vector<ClaimResult> claims, const std::vector<std::string>& labels) {
  for (ClaimResult& c : claims) c.gate = std::find(labels.begin(), labels.end(), c.label) != labels.end();
  return claims;
}

void append(std::vector<ClaimResult>& to, std::vector<ClaimResult> from, const std::string& prefix = {}) {
  for (ClaimResult& c : from) {
    if (!prefix.empty()) c.label = prefix + c.label;
    to.push_back(std::move(c));
  }
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<ClaimResult> verify_scalar_coupling(const CumulantModel& model, double nu, const VerifyConfig& cfg) {
  const XiLaw law(model, nu);
  std::function<double(double)> t_cdf;
  if (model.family() == CumulantFamily::Gamma) {
    t_cdf = gamma_cdf_of(model.shape() - nu);
  } else {
    const CumulantModel m = model;
    t_cdf = cdf_of(numeric_law([m, nu](double t) { return std::exp(-nu * std::log(t)) * m.density(t); }));
  }
  Claims claims;
  for (std::uint64_t seed : cfg.seeds) {
    const auto draws = replicate<ScalarCoupling>(seed, kTagScalar, cfg.n, cfg.workers,
                                                 [&](RngStream& rng) { return couple_scalar(rng, law); });
    const auto t = column(draws, [](const ScalarCoupling& c) { return c.T; });
    const auto xt = column(draws, [](const ScalarCoupling& c) { return c.xiT(); });
    claims.add("T ~ nu-polynomial tilt of T0", ks_one_sample(t, t_cdf, cfg.level), seed);
    claims.add("xi T ~ Gamma(nu)", ks_one_sample(xt, gamma_cdf_of(nu), cfg.level), seed);
    claims.add("T independent of xi T", independence(t, xt, cfg, seed), seed);
  }
  return claims.take();
}

std::vector<ClaimResult> verify_gg_coupling(StableParams p, double b, double nu, const VerifyConfig& cfg) {
  struct Draw {
    double T, xiT, p1, half;
  };
  const double alpha = p.alpha();
  auto t_law = numeric_law([alpha, b, nu](double t) {
    return std::exp(-nu * std::log(t) - b * t) * stable_density(StableParams(alpha), t);
  });
  Claims claims;
  for (std::uint64_t seed : cfg.seeds) {
    const auto draws = replicate<Draw>(seed, kTagGg, cfg.n, cfg.workers, [&](RngStream& rng) {
      const MeasureCoupling c = couple_gg_measure(rng, p, b, nu, cfg.truncation);
      return Draw{c.T, c.xiT(), c.weights.leader(), mass_below_half(c.measure)};
    });
    const auto xt = column(draws, [](const Draw& d) { return d.xiT; });
    const auto t = column(draws, [](const Draw& d) { return d.T; });
    const auto p1 = column(draws, [](const Draw& d) { return d.p1; });
    const auto half = column(draws, [](const Draw& d) { return d.half; });
    claims.add("xi T ~ Gamma(nu)", ks_one_sample(xt, gamma_cdf_of(nu), cfg.level), seed);
    claims.add("T ~ t^-nu e^-bt f_alpha", ks_one_sample(t, cdf_of(t_law), cfg.level), seed);
    if (b == 0.0) {
      const auto oracle = stick_breaking_leaders(seed, alpha, nu, cfg.n_compare, cfg.workers);
      claims.add("p1 ~ PD(alpha, nu) by stick breaking", ks_two_sample(head(p1, cfg.n_compare), oracle, cfg.level),
                 seed);
    }
    claims.add("p1 independent of xi T", independence(p1, xt, cfg, seed), seed);
    claims.add("P[0,1/2] independent of xi T", independence(half, xt, cfg, seed), seed);
  }
  return claims.take();
}

std::vector<ClaimResult> verify_size_biased(StableParams p, double b, double nu, const VerifyConfig& cfg) {
  detail::require(b > 0.0, "size-biased coupling needs b > 0");
  struct Draw {
    double T, xiT, p1;
  };
  const double alpha = p.alpha();
  std::shared_ptr<const NumericDistribution> t_law;
  if (nu != 1.0) {
    t_law = numeric_law([alpha, b, nu](double t) {
      return std::exp((1.0 - nu) * std::log(t) - b * t) * stable_density(StableParams(alpha), t);
    });
  }
  Claims claims;
  for (std::uint64_t seed : cfg.seeds) {
    const auto draws = replicate<Draw>(seed, kTagSizeBiased, cfg.n, cfg.workers, [&](RngStream& rng) {
      const MeasureCoupling c = couple_size_biased(rng, p, b, nu, cfg.truncation);
      return Draw{c.T, c.xiT(), c.weights.leader()};
    });
    const auto xt = column(draws, [](const Draw& d) { return d.xiT; });
    const auto t = column(draws, [](const Draw& d) { return d.T; });
    const auto p1 = column(draws, [](const Draw& d) { return d.p1; });
    claims.add("xi T ~ Gamma(nu)", ks_one_sample(xt, gamma_cdf_of(nu), cfg.level), seed);
    if (nu == 1.0) {
      const auto ref = replicate<double>(seed, kTagTilted, cfg.n, cfg.workers,
                                         [&](RngStream& rng) { return sample_tilted_stable(rng, p, b); });
      claims.add("T ~ X_{alpha,b} (nu = 1)", ks_two_sample(t, ref, cfg.level), seed);
      const auto z = replicate<RandomScalingDraw>(seed, kTagScaling, cfg.n_compare, cfg.workers,
                                                  [&](RngStream& rng) { return random_scaling_draw(rng, p, b); });
      const auto scaled = column(z, [](const RandomScalingDraw& d) { return d.scaled; });
      const auto dec = column(z, [](const RandomScalingDraw& d) { return d.decoupled; });
      claims.add("(Z - b) tau(Z^alpha + G)/Z ~ Gamma(1)", ks_one_sample(dec, gamma_cdf_of(1.0), cfg.level), seed);
      claims.add("tau(Z^alpha + G)/Z independent of its (Z - b) multiple", independence(scaled, dec, cfg, seed), seed);
      claims.add("tau(Z^alpha + G)/Z ~ X_{alpha,b}", ks_two_sample(scaled, head(ref, cfg.n_compare), cfg.level),
                 seed);
    } else {
      claims.add("T ~ (nu-1)-polynomial tilt of X_{alpha,b}", ks_one_sample(t, cdf_of(t_law), cfg.level), seed);
    }
    claims.add("p1 independent of xi T", independence(p1, xt, cfg, seed), seed);
  }
  return claims.take();
}

std::vector<ClaimResult> verify_pd_bridge(StableParams p, double theta, const VerifyConfig& cfg) {
  struct Draw {
    double xiT, tiltT, p1;
  };
  const double alpha = p.alpha();
  Claims claims;
  for (std::uint64_t seed : cfg.seeds) {
    const auto draws = replicate<Draw>(seed, kTagBridge, cfg.n, cfg.workers, [&](RngStream& rng) {
      const PdBridgeDraw d = couple_pd_bridge(rng, p, theta, cfg.truncation);
      return Draw{d.xi_H * d.T, d.tilt() * d.T, d.weights.leader()};
    });
    const auto xt = column(draws, [](const Draw& d) { return d.xiT; });
    const auto bt = column(draws, [](const Draw& d) { return d.tiltT; }, cfg.n_compare);
    const auto p1 = column(draws, [](const Draw& d) { return d.p1; });
    claims.add("xi_H T ~ Gamma(theta + alpha)", ks_one_sample(xt, gamma_cdf_of(theta + alpha), cfg.level), seed);
    const auto oracle = stick_breaking_leaders(seed, alpha, theta, cfg.n_compare, cfg.workers);
    claims.add("p1 ~ PD(alpha, theta) by stick breaking", ks_two_sample(head(p1, cfg.n_compare), oracle, cfg.level),
               seed);
    claims.add("p1 independent of xi_H T", independence(p1, xt, cfg, seed), seed);
    claims.add("(xi_H + H) T ~ Gamma(1 + theta)", ks_one_sample(bt, gamma_cdf_of(1.0 + theta), cfg.level), seed,
               false);
    if (1.0 - theta > 0.0)
      claims.add("(xi_H + H) T ~ Gamma(1 - theta)", ks_one_sample(bt, gamma_cdf_of(1.0 - theta), cfg.level), seed,
                 false);
  }
  return claims.take();
}

std::vector<ClaimResult> verify_beta_gamma_pair(StableParams p, double theta, const VerifyConfig& cfg) {
  const double alpha = p.alpha();
  const double shape = (alpha + theta) / alpha;
  Claims claims;
  for (std::uint64_t seed : cfg.seeds) {
    const auto mix = replicate<XiHPair>(seed, kTagPairMix, cfg.n, cfg.workers,
                                        [&](RngStream& rng) { return sample_xi_H_mixture(rng, p, theta); });
    const auto pair = replicate<XiHPair>(seed, kTagPairDirect, cfg.n, cfg.workers,
                                         [&](RngStream& rng) { return sample_xi_H_pair(rng, p, theta); });
    auto power = [alpha](const XiHPair& d) { return std::pow(d.xi + d.H, alpha); };
    claims.add("(xi_H + H)^alpha ~ Gamma((alpha + theta)/alpha), mixture route",
               ks_one_sample(column(mix, power), gamma_cdf_of(shape), cfg.level), seed);
    claims.add("(xi_H + H)^alpha ~ Gamma((alpha + theta)/alpha), pair route",
               ks_one_sample(column(pair, power), gamma_cdf_of(shape), cfg.level), seed);
    claims.add("xi_H/(xi_H + H) ~ Beta(theta + alpha, 1 - alpha), mixture route",
               ks_one_sample(column(mix, [](const XiHPair& d) { return d.xi / (d.xi + d.H); }),
                             [theta, alpha](double x) { return beta_cdf(theta + alpha, 1.0 - alpha, x); }, cfg.level),
               seed);
    claims.add("xi_H: mixture route vs pair route",
               ks_two_sample(column(mix, [](const XiHPair& d) { return d.xi; }, cfg.n_compare),
                             column(pair, [](const XiHPair& d) { return d.xi; }, cfg.n_compare), cfg.level),
               seed);
  }
  return claims.take();
}

std::vector<ClaimResult> verify_diversity(StableParams p, double theta, std::size_t replicates,
                                          std::size_t customers, double tol, const VerifyConfig& cfg) {
  const double alpha = p.alpha();
  if (theta < 0.0) throw UnsupportedFamily("diversity reference law implemented for theta >= 0");
  Claims claims;
  for (std::uint64_t seed : cfg.seeds) {
    const auto k = replicate<double>(seed, kTagCrp, replicates, cfg.workers, [&](RngStream& rng) {
      return diversity_estimate(crp_partition(rng, alpha, theta, customers), alpha);
    });
    const auto limit = replicate<double>(seed, kTagLimit, cfg.n, cfg.workers, [&](RngStream& rng) {
      const double t = theta == 0.0 ? sample_pos_stable(rng, p) : stable_gamma_draw(rng, p, theta).scaled;
      return std::pow(t, -alpha);
    });
    StatReport r = ks_two_sample(k, limit, cfg.level);
    r.threshold = tol;
    r.pass = r.statistic < tol;
    claims.add("K_n/n^alpha ~ T^-alpha (fixed KS tolerance)", r, seed);
  }
  return claims.take();
}

std::vector<ClaimResult> verify_excursion(StableParams p, double nu, double b, const VerifyConfig& cfg) {
  const double alpha = p.alpha();
  const LevyDensityModel base = LevyDensityModel::power_law(alpha / std::tgamma(1.0 - alpha), alpha, 0.0);
  const ExcursionCoupler coupler(base, b, nu);
  const ExcursionSampler untilted(base.tilted(b));
  const ThreeCaseModel tc = three_case_model(alpha, nu, b);
  std::unique_ptr<ExcursionSampler> direct;
  if (tc.tag == LevyCase::CompoundPoisson) direct = std::make_unique<ExcursionSampler>(tc.model);
  Claims claims;
  for (std::uint64_t seed : cfg.seeds) {
    const auto draws = replicate<ExcursionCoupling>(seed, kTagExcursion, cfg.n, cfg.workers,
                                                    [&](RngStream& rng) { return coupler.sample(rng); });
    const auto xd = column(draws, [](const ExcursionCoupling& c) { return c.xi_duration(); });
    const auto dur = column(draws, [](const ExcursionCoupling& c) { return c.triple.duration; });
    const auto over = column(draws, [](const ExcursionCoupling& c) { return c.triple.overshoot; });
    const auto under = column(draws, [](const ExcursionCoupling& c) { return c.triple.undershoot; });
    claims.add("xi Delta ~ Gamma(nu)", ks_one_sample(xd, gamma_cdf_of(nu), cfg.level), seed);
    claims.add("Delta independent of xi Delta", independence(dur, xd, cfg, seed), seed);
    claims.add("O independent of xi Delta", independence(over, xd, cfg, seed), seed);
    claims.add("U independent of xi Delta", independence(under, xd, cfg, seed), seed);
    const auto ref = replicate<ExcursionTriple>(seed, kTagTiltedDirect, cfg.n_compare, cfg.workers,
                                                [&](RngStream& rng) { return untilted.sample(rng); });
    claims.add("Delta ~ straddle duration of the b-tilted density",
               ks_two_sample(head(dur, cfg.n_compare),
                             column(ref, [](const ExcursionTriple& e) { return e.duration; }), cfg.level),
               seed);
    claims.add("(O, U) ~ straddle pair of the b-tilted density: O",
               ks_two_sample(head(over, cfg.n_compare),
                             column(ref, [](const ExcursionTriple& e) { return e.overshoot; }), cfg.level),
               seed);
    if (direct) {
      const auto d = replicate<ExcursionTriple>(seed, kTagDirect, cfg.n_compare, cfg.workers,
                                                [&](RngStream& rng) { return direct->sample(rng); });
      const auto o = replicate<ExcursionTriple>(seed, kTagPath, cfg.n_compare, cfg.workers, [&](RngStream& rng) {
        return sample_excursion_path_oracle(rng, tc.model);
      });
      auto ov = [](const ExcursionTriple& e) { return e.overshoot; };
      auto un = [](const ExcursionTriple& e) { return e.undershoot; };
      auto du = [](const ExcursionTriple& e) { return e.duration; };
      claims.add("direct vs path oracle: O", ks_two_sample(column(d, ov), column(o, ov), cfg.level), seed);
      claims.add("direct vs path oracle: U", ks_two_sample(column(d, un), column(o, un), cfg.level), seed);
      claims.add("direct vs path oracle: Delta", ks_two_sample(column(d, du), column(o, du), cfg.level), seed);
    }
  }
  return claims.take();
}

std::vector<ClaimResult> verify_stable_gamma(StableParams p, double theta, double y, const VerifyConfig& cfg) {
  Claims claims;
  for (std::uint64_t seed : cfg.seeds) {
    for (StatReport& r : stable_gamma_algebra_check(seed, p, theta, y, cfg.n, cfg.level, cfg.workers)) {
      const std::string label = r.claim;
      claims.add(label, std::move(r), seed);
    }
  }
  return claims.take();
}

std::vector<ClaimResult> verify_kernels() {
  Claims claims;
  {
    const StableParams half(0.5);
    double worst = 0.0;
    const int points = 200;
    for (int i = 0; i < points; ++i) {
      const double t = 0.05 * std::pow(20.0 / 0.05, static_cast<double>(i) / (points - 1));
      const double exact = levy_half_density(t);
      worst = std::max(worst, std::abs(stable_density_integral(half, t) - exact) / exact);
    }
    claims.add("alpha = 1/2 stable density: quadrature vs closed form on [0.05, 20]", tolerance(worst, 1e-8), 0);
  }
  {
    const double exact = 2.0 / std::sqrt(std::numbers::pi);
    const double v = neg_moment_laplace(CumulantModel::stable(StableParams(0.5)), 0.5);
    claims.add("E[S^-1/2] = 2/sqrt(pi) by Laplace quadrature", tolerance(std::abs(v - exact), 1e-8), 0);
  }
  struct Case {
    const char* label;
    double alpha, nu, b;
  };
  for (const Case& c : {Case{"tilted exponent closed form vs quadrature, delta > 0", 0.75, 0.25, 0.0},
                        Case{"tilted exponent closed form vs quadrature, delta = 0", 0.5, 0.5, 1.0},
                        Case{"tilted exponent closed form vs quadrature, delta < 0", 0.5, 1.5, 1.0}}) {
    const LevyDensityModel m = three_case_model(c.alpha, c.nu, c.b).model;
    double worst = 0.0;
    for (double s : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      const double closed = m.exponent(s);
      worst = std::max(worst, std::abs(m.exponent_quadrature(s) - closed) / closed);
    }
    claims.add(c.label, tolerance(worst, 1e-6), 0);
  }
  return claims.take();
}

std::vector<ClaimResult> verify_factorization() {
  std::vector<double> grid;
  for (int i = 0; i < 50; ++i) grid.push_back(0.1 + (5.0 - 0.1) * i / 49.0);
  const FactorizationReport rep = factorization_check(CumulantModel::gamma(2.0), 1.0, grid, grid);
  Claims claims;
  claims.add("joint density: scaling law x tilt vs marginal x scaled gamma",
             tolerance(rep.max_rel_conditional_vs_marginal, 1e-6), 0);
  claims.add("joint density: scaling law x tilt vs closed form", tolerance(rep.max_rel_conditional_vs_closed, 1e-6),
             0);
  return claims.take();
}

std::vector<ClaimResult> verify_calibration(std::size_t runs, std::uint64_t seed, double level, unsigned workers) {
  Claims claims;
  for (TestKind k : {TestKind::KS1, TestKind::KS2, TestKind::DistCorrPerm, TestKind::MomentCI}) {
    const CalibrationResult c = null_calibration(k, runs, seed, level, workers);
    StatReport r = tolerance(c.rate(), 0.04);
    r.test = k;
    r.n = runs;
    r.note = std::to_string(c.rejections) + " rejections";
    claims.add(to_string(k) + " false-positive rate within the binomial band", r, seed);
  }
  return claims.take();
}

// ---------------------------------------------------------------------------

namespace {

struct Criterion {
  const char* title;
  double budget;
  std::function<std::vector<ClaimResult>(const VerifyConfig&)> run;
};

std::vector<Criterion> criteria() {
  const StableParams half(0.5);
  std::vector<Criterion> out;
  out.push_back({"stable-gamma algebra: tau(zeta) ~ Gamma(theta)", 30.0, [half](const VerifyConfig& cfg) {
                   return gate_only(verify_stable_gamma(half, 1.0, 0.5, cfg), {"tau(zeta) ~ Gamma(theta)"});
                 }});
  out.push_back({"scalar coupling, Gamma(2) base, nu = 1", 60.0, [](const VerifyConfig& cfg) {
                   return verify_scalar_coupling(CumulantModel::gamma(2.0), 1.0, cfg);
                 }});
  out.push_back({"joint density factorization, Gamma(2) base, nu = 1", 5.0,
                 [](const VerifyConfig&) { return verify_factorization(); }});
  out.push_back({"generalized gamma measure coupling, alpha = 1/2, b = 0, nu = 1/2", 300.0,
                 [half](const VerifyConfig& cfg) {
                   return gate_only(verify_gg_coupling(half, 0.0, 0.5, cfg),
                                    {"xi T ~ Gamma(nu)", "p1 ~ PD(alpha, nu) by stick breaking", "p1 independent of xi T"});
                 }});
  out.push_back({"size-biased coupling, alpha = 1/2, b = 1", 180.0, [half](const VerifyConfig& cfg) {
                   std::vector<ClaimResult> claims;
                   append(claims, gate_only(verify_size_biased(half, 1.0, 1.5, cfg), {"xi T ~ Gamma(nu)"}), "nu=1.5: ");
                   append(claims, gate_only(verify_size_biased(half, 1.0, 1.0, cfg), {"T ~ X_{alpha,b} (nu = 1)"}),
                          "nu=1: ");
                   return claims;
                 }});
  out.push_back({"full-range Poisson-Dirichlet bridge, alpha = 1/2", 300.0, [half](const VerifyConfig& cfg) {
                   std::vector<ClaimResult> claims;
                   append(claims, gate_only(verify_pd_bridge(half, -0.25, cfg), {"xi_H T ~ Gamma(theta + alpha)"}),
                          "theta=-0.25: ");
                   VerifyConfig small = cfg;
                   small.n = cfg.n_compare;
                   append(claims, gate_only(verify_pd_bridge(half, 0.5, small), {"p1 ~ PD(alpha, theta) by stick breaking"}),
                          "theta=0.5: ");
                   return claims;
                 }});
  out.push_back({"beta-gamma pair, alpha = 1/2, theta = 1/2", 30.0, [half](const VerifyConfig& cfg) {
                   return gate_only(verify_beta_gamma_pair(half, 0.5, cfg),
                                    {"(xi_H + H)^alpha ~ Gamma((alpha + theta)/alpha), mixture route"});
                 }});
  out.push_back({"alpha-diversity of the (1/2, 0) restaurant at n = 10^4", 600.0, [half](const VerifyConfig& cfg) {
                   return verify_diversity(half, 0.0, 500, 10000, 0.05, cfg);
                 }});
  out.push_back({"excursion coupling, alpha = 1/2, nu = 3/2, b = 1", 300.0, [half](const VerifyConfig& cfg) {
                   return gate_only(verify_excursion(half, 1.5, 1.0, cfg),
                                    {"xi Delta ~ Gamma(nu)", "Delta independent of xi Delta", "direct vs path oracle: O",
                                     "direct vs path oracle: U", "direct vs path oracle: Delta"});
                 }});
  out.push_back({"numeric kernels", 10.0, [](const VerifyConfig&) { return verify_kernels(); }});
  out.push_back({"statistical engine null calibration", 300.0, [](const VerifyConfig& cfg) {
                   return verify_calibration(200, cfg.seeds.empty() ? 0 : cfg.seeds.front(), cfg.level, cfg.workers);
                 }});
  return out;
}

CheckResult timed(int id, const std::string& title, double budget,
                  const std::function<std::vector<ClaimResult>()>& run) {
  CheckResult r;
  r.id = id;
  r.title = title;
  r.budget_seconds = budget;
  const auto start = std::chrono::steady_clock::now();
  r.claims = run();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

std::vector<std::string> acceptance_titles() {
  std::vector<std::string> out;
  for (const Criterion& c : criteria()) out.emplace_back(c.title);
  return out;
}

CheckResult run_acceptance_criterion(int id, const SuiteOptions& options) {
  const std::vector<Criterion> all = criteria();
  if (id < 1 || id > static_cast<int>(all.size())) detail::domain_fail("no acceptance criterion " + std::to_string(id));
  const Criterion& c = all[static_cast<std::size_t>(id - 1)];
  return timed(id, c.title, c.budget, [&] { return c.run(options.config); });
}

std::vector<CheckResult> run_acceptance(const SuiteOptions& options,
                                        const std::function<void(const CheckResult&)>& on_done) {
  std::vector<CheckResult> out;
  const int count = static_cast<int>(criteria().size());
  for (int id = 1; id <= count; ++id) {
    out.push_back(run_acceptance_criterion(id, options));
    if (on_done) on_done(out.back());
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<ClaimResult> extended_rejection(const VerifyConfig& cfg) {
  const StableParams half(0.5);
  const std::size_t n = cfg.n_compare;
  auto tilted = numeric_law([](double t) { return std::exp(-t) * stable_density(StableParams(0.5), t); });
  auto xi_law = numeric_law([](double s) { return std::exp(-(std::sqrt(1.0 + s) - 1.0)); });
  Claims claims;
  for (std::uint64_t seed : cfg.seeds) {
    const auto a = replicate<double>(seed, kTagExtended + 1, n, cfg.workers,
                                     [&](RngStream& rng) { return sample_tilted_stable(rng, half, 1.0); });
    const auto b = replicate<double>(seed, kTagExtended + 2, n, cfg.workers,
                                     [&](RngStream& rng) { return tilted->sample(rng); });
    claims.add("tilted stable b=1: rejection vs numeric inverse CDF", ks_two_sample(a, b, cfg.level), seed);
    const auto c = replicate<double>(seed, kTagExtended + 3, n, cfg.workers,
                                     [&](RngStream& rng) { return sample_xi_tilted(rng, half, 1.0, 1.0); });
    const auto d = replicate<double>(seed, kTagExtended + 4, n, cfg.workers,
                                     [&](RngStream& rng) { return xi_law->sample(rng); });
    claims.add("scaling law b=1, nu=1: rejection vs numeric inverse CDF", ks_two_sample(c, d, cfg.level), seed);
    RngStream rng(seed, kTagExtended + 5);
    RejectionStats st;
    for (std::size_t i = 0; i < n; ++i) sample_tilted_stable(rng, half, 4.0, &st);
    StatReport r = tolerance(-st.acceptance_rate(), -std::exp(-2.0));
    r.note = "acceptance rate " + std::to_string(st.acceptance_rate());
    claims.add("tilted stable b=4: acceptance rate >= e^-2", r, seed);
  }
  return claims.take();
}

std::vector<ClaimResult> extended_measures(const VerifyConfig& cfg) {
  const StableParams half(0.5);
  const std::size_t n = cfg.n_compare;
  auto bridge_law = numeric_law([](double t) {
    // b = 1: t f_alpha(t) e^{-t}, normalizing constants dropped
    return t * std::exp(-t) * stable_density(StableParams(0.5), t);
  });
  Claims claims;
  for (std::uint64_t seed : cfg.seeds) {
    const auto m = replicate<double>(seed, kTagExtended + 10, n, cfg.workers, [&](RngStream& rng) {
      return sample_gg_measure(rng, half, 1.0, cfg.truncation).total_mass;
    });
    const auto x = replicate<double>(seed, kTagExtended + 11, n, cfg.workers,
                                     [&](RngStream& rng) { return sample_tilted_stable(rng, half, 1.0); });
    claims.add("gg measure total mass ~ X_{alpha,b}", ks_two_sample(m, x, cfg.level), seed);
    for (double s : {0.5, 1.0, 2.0}) {
      const double target = std::exp(-(std::pow(1.0 + s, 0.5) - 1.0));
      claims.add("gg measure Laplace transform at s=" + std::to_string(s).substr(0, 3),
                 moment_ci(m, target, [s](double t) { return std::exp(-s * t); }), seed);
    }
    const auto bt = replicate<double>(seed, kTagExtended + 12, n, cfg.workers, [&](RngStream& rng) {
      return bridge_measure(rng, half, 1.0, cfg.truncation).total_mass;
    });
    claims.add("bridge total mass ~ size-biased tilted stable", ks_one_sample(bt, cdf_of(bridge_law), cfg.level), seed);
    claims.add("bridge total mass mean = 1", moment_ci(bt, 1.0), seed);
    const auto mixed = replicate<double>(seed, kTagExtended + 13, n, cfg.workers, [&](RngStream& rng) {
      const double b = sample_gamma(rng, 1.0);
      return couple_gg_measure(rng, half, b, 0.5, cfg.truncation).xiT();
    });
    claims.add("randomized b ~ Gamma(1): xi T ~ Gamma(nu)", ks_one_sample(mixed, gamma_cdf_of(0.5), cfg.level), seed);
    const XiLaw law(CumulantModel::tilted_stable(half, 0.0), 0.5);
    const auto scalar = replicate<double>(seed, kTagExtended + 14, n, cfg.workers,
                                          [&](RngStream& rng) { return couple_scalar(rng, law).T; });
    const auto measure = replicate<double>(seed, kTagExtended + 15, n, cfg.workers, [&](RngStream& rng) {
      return couple_gg_measure(rng, half, 0.0, 0.5, cfg.truncation).T;
    });
    claims.add("scalar coupling T vs measure coupling T", ks_two_sample(scalar, measure, cfg.level), seed);
    const double kappa = 0.5 / std::tgamma(0.5);
    const auto gp = replicate<double>(seed, kTagExtended + 16, n, cfg.workers, [&](RngStream& rng) {
      return normalize(sample_gamma_process_measure(rng, kappa, 1.0 + rng.exponential(), cfg.truncation)).leader();
    });
    for (double conc : {kappa, 0.5}) {
      const auto oracle = replicate<double>(seed, kTagExtended + 17, n, cfg.workers, [&](RngStream& rng) {
        StickBreakingOptions opt;
        opt.deficit_tolerance = 1e-3;
        return stick_breaking_pd(rng, 0.0, conc, opt).leader();
      });
      claims.add("gamma-process weights p1 vs PD(0, " + std::to_string(conc).substr(0, 6) + ")",
                 ks_two_sample(gp, oracle, cfg.level), seed, conc == kappa);
    }
  }
  return claims.take();
}

std::vector<ClaimResult> extended_excursions() {
  Claims claims;
  double worst = 0.0;
  struct Case {
    double alpha, nu, b;
  };
  for (const Case& c : {Case{0.75, 0.25, 0.0}, Case{0.5, 0.5, 1.0}, Case{0.5, 1.5, 1.0}}) {
    const LevyDensityModel base =
        LevyDensityModel::power_law(c.alpha / std::tgamma(1.0 - c.alpha), c.alpha, 0.0);
    const ExcursionCoupler coupler(base, c.b, c.nu);
    worst = std::max(worst, std::abs(coupler.xi_mass() / (std::tgamma(c.nu) * coupler.normalizer()) - 1.0));
  }
  claims.add("scaling density of the excursion coupling integrates to 1", tolerance(worst, 1e-6), 0);
  const LevyDensityModel g = LevyDensityModel::gamma_process();
  worst = 0.0;
  for (double t : {0.5, 1.0, 2.0}) {
    auto h = [&](double u) { return straddle_joint_density(g, t - u, u); };
    const double v = quad::finite(h, 0.0, t, 1e-13, 20).value;
    const double f = straddle_duration_density(g, t);
    worst = std::max(worst, std::abs(v - f) / f);
  }
  claims.add("joint (O, U) density marginalizes to the duration density", tolerance(worst, 1e-8), 0);
  return claims.take();
}

std::vector<ClaimResult> extended_independence(const VerifyConfig& cfg) {
  Claims claims;
  std::size_t agree = 0;
  const std::size_t datasets = 10;
  for (std::size_t k = 0; k < datasets; ++k) {
    RngStream rng(cfg.seeds.empty() ? 0 : cfg.seeds.front(), kTagExtended + 20 + k);
    std::vector<double> x(300);
    std::vector<double> y(300);
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = rng.normal();
      y[i] = (k % 2 == 0 ? 0.0 : 0.3 * x[i]) + rng.normal();
    }
    PermutationOptions opt;
    opt.permutations = 199;
    opt.seed = k;
    opt.workers = cfg.workers;
    const StatReport a = independence_test(x, y, opt, cfg.level);
    const StatReport b = independence_test(y, x, opt, cfg.level);
    std::vector<double> xm(x.size());
    std::vector<double> ym(y.size());
    std::transform(x.begin(), x.end(), xm.begin(), [](double v) { return std::exp(3.0 * v); });
    std::transform(y.begin(), y.end(), ym.begin(), [](double v) { return v * v * v; });
    const StatReport c = independence_test(xm, ym, opt, cfg.level);
    if (a.pass == b.pass && a.pass == c.pass && *a.p_value == *c.p_value) ++agree;
  }
  claims.add("independence verdicts symmetric and invariant under monotone maps",
             tolerance(static_cast<double>(datasets - agree), 0.0), 0);
  return claims.take();
}

}  // namespace

std::vector<CheckResult> run_extended(const SuiteOptions& options,
                                      const std::function<void(const CheckResult&)>& on_done) {
  const VerifyConfig& cfg = options.config;
  const StableParams half(0.5);
  std::vector<std::pair<std::string, std::function<std::vector<ClaimResult>()>>> checks;
  checks.emplace_back("rejection samplers against numeric inverse CDFs", [&] { return extended_rejection(cfg); });
  checks.emplace_back("random measures and their normalizations", [&] { return extended_measures(cfg); });
  checks.emplace_back("split subordinator path at y = 1/2", [&] {
    VerifyConfig c = cfg;
    c.n = cfg.n_compare;
    return verify_stable_gamma(half, 1.0, 0.5, c);
  });
  checks.emplace_back("random scaling with nu = 1", [&] {
    VerifyConfig c = cfg;
    c.n = cfg.n_compare;
    return verify_size_biased(half, 1.0, 1.0, c);
  });
  checks.emplace_back("beta-gamma pair, negative theta", [&] {
    VerifyConfig c = cfg;
    c.n = cfg.n_compare;
    return verify_beta_gamma_pair(half, -0.25, c);
  });
  checks.emplace_back("excursion density identities", [] { return extended_excursions(); });
  checks.emplace_back("independence test invariances", [&] { return extended_independence(cfg); });
  std::vector<CheckResult> out;
  int id = 100;
  for (auto& [title, fn] : checks) {
    out.push_back(timed(++id, title, 0.0, fn));
    if (on_done) on_done(out.back());
  }
  return out;
}

}  // namespace rscale
