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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rscale/special_fn.hpp"
#include "rscale/stats.hpp"

namespace rscale {

/// Sample sizes and seeds shared by the verification routines.
struct VerifyConfig {
  std::vector<std::uint64_t> seeds{101, 202, 303};
  /// Draws per goodness-of-fit test.
  std::size_t n = 100000;
  /// Pairs per independence test.
  std::size_t n_pairs = 2000;
  /// Draws per side when comparing ranked weights or two samplers.
  std::size_t n_compare = 10000;
  std::size_t permutations = 499;
  double level = kDefaultLevel;
  /// Relative truncation of simulated jump measures.
  double truncation = 1e-3;
  unsigned workers = 0;
};

/// One property checked once per seed. A claim holds when at least two thirds
/// of its runs pass. Claims with gate = false are reported only.
struct ClaimResult {
  std::string label;
  std::vector<StatReport> runs;
  bool gate = true;

  bool pass() const { return majority(runs).pass(); }
};

/// Outcome of a group of claims (an acceptance criterion or a verify command).
struct CheckResult {
  int id = 0;
  std::string title;
  std::vector<ClaimResult> claims;
  double seconds = 0.0;
  /// Wall-clock budget; 0 means none.
  double budget_seconds = 0.0;

  bool within_budget() const noexcept { return budget_seconds <= 0.0 || seconds <= budget_seconds; }
  bool pass() const;
};

// ---------------------------------------------------------------------------
// Verification routines. Each returns its claims; replicate r of seed s uses
// its own stream, so results do not depend on the worker count.

/// xi and T coupled through a scalar base law: T against its polynomial tilt,
/// xi T against Gamma(nu), and independence of T and xi T.
std::vector<ClaimResult> verify_scalar_coupling(const CumulantModel& model, double nu, const VerifyConfig& cfg);

/// Generalized gamma measure coupling at (b, nu).
std::vector<ClaimResult> verify_gg_coupling(StableParams p, double b, double nu, const VerifyConfig& cfg);

/// Size-biased (bridge) coupling at (b, nu), b > 0.
std::vector<ClaimResult> verify_size_biased(StableParams p, double b, double nu, const VerifyConfig& cfg);

/// Randomized bridge giving PD(alpha, theta).
std::vector<ClaimResult> verify_pd_bridge(StableParams p, double theta, const VerifyConfig& cfg);

/// The beta-gamma pair (xi_H, H) against the H-mixed scaling law.
std::vector<ClaimResult> verify_beta_gamma_pair(StableParams p, double theta, const VerifyConfig& cfg);

/// K_n / n^alpha from Chinese restaurant partitions against T^{-alpha}.
/// Passes when the two-sample KS distance is below `tolerance`.
std::vector<ClaimResult> verify_diversity(StableParams p, double theta, std::size_t replicates,
                                          std::size_t customers, double tolerance, const VerifyConfig& cfg);

/// Excursion coupling for the stable Levy density tilted by (b, nu).
std::vector<ClaimResult> verify_excursion(StableParams p, double nu, double b, const VerifyConfig& cfg);

/// tau_alpha(zeta) with zeta = G_{theta/alpha}, including the split path at y.
std::vector<ClaimResult> verify_stable_gamma(StableParams p, double theta, double y, const VerifyConfig& cfg);

/// Deterministic kernels: stable density closed form vs quadrature, the
/// stable negative moment, and the three closed-form tilted exponents.
std::vector<ClaimResult> verify_kernels();

/// Three-route joint density comparison for Gamma(2), nu = 1 on [0.1, 5]^2.
std::vector<ClaimResult> verify_factorization();

/// False-positive rate of each test over `runs` null experiments.
std::vector<ClaimResult> verify_calibration(std::size_t runs, std::uint64_t seed, double level, unsigned workers);

// ---------------------------------------------------------------------------

struct SuiteOptions {
  VerifyConfig config;
};

/// Titles of the acceptance criteria, in order.
std::vector<std::string> acceptance_titles();

/// Runs acceptance criterion `id` (1-based).
CheckResult run_acceptance_criterion(int id, const SuiteOptions& options);

/// Runs every acceptance criterion; `on_done` is called after each one.
std::vector<CheckResult> run_acceptance(const SuiteOptions& options,
                                        const std::function<void(const CheckResult&)>& on_done = {});

/// Additional invariants beyond the acceptance criteria.
std::vector<CheckResult> run_extended(const SuiteOptions& options,
                                      const std::function<void(const CheckResult&)>& on_done = {});

}  // namespace rscale
