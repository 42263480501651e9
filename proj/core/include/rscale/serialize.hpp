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
#include <ostream>
#include <string>
#include <vector>

#include "rscale/measures.hpp"
#include "rscale/stats.hpp"
#include "rscale/suite.hpp"

namespace rscale {

/// 17 significant digits, '.' decimal point, locale independent.
std::string format_double(double x);

/// Minimal CSV emitter. Fields containing ',', '"' or newlines are quoted.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  CsvWriter& field(const std::string& s);
  CsvWriter& field(double x);
  CsvWriter& field(std::uint64_t x);
  CsvWriter& end_row();
  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
  bool first_ = true;
};

/// One row per jump: rank,size,location,total_mass,tail_bound,seed.
void write_measure_csv(std::ostream& out, const JumpMeasure& m);

/// One row per weight: rank,weight,deficit,seed.
void write_weights_csv(std::ostream& out, const RankedWeights& w, std::uint64_t seed);

/// One row per seeded run of every claim.
void write_report_csv(std::ostream& out, const std::vector<CheckResult>& checks);
void write_report_json(std::ostream& out, const std::vector<CheckResult>& checks);

}  // namespace rscale
