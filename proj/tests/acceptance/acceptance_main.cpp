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


// Runs the acceptance criteria: three fixed seeds per statistical claim, a
// claim passes when at least two seeds pass at level 1%, and each criterion
// must finish inside its wall-clock budget.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "rscale/suite.hpp"

namespace {

bool report(const rscale::CheckResult& r) {
  const bool ok = r.pass();
  for (const rscale::ClaimResult& c : r.claims) {
    const rscale::MajorityVerdict v = rscale::majority(c.runs);
    std::printf("    %s %s: %zu/%zu seeds\n", c.gate ? (c.pass() ? "ok  " : "FAIL") : "info", c.label.c_str(),
                v.passed, v.runs);
  }
  std::printf("criterion %2d %s  %s  (%.1f s of %.0f s)\n", r.id, ok ? "PASS" : "FAIL", r.title.c_str(), r.seconds,
              r.budget_seconds);
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }
  rscale::SuiteOptions opt;
  try {
    if (only > 0) return report(rscale::run_acceptance_criterion(only, opt)) ? 0 : 1;
    bool all = true;
    rscale::run_acceptance(opt, [&](const rscale::CheckResult& r) { all = report(r) && all; });
    return all ? 0 : 1;
  } catch (const std::exception& e) {
    std::printf("criterion %2d FAIL  error: %s\n", only, e.what());
    return 1;
  }
}
