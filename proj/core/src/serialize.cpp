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


#include "rscale/serialize.hpp"

#include <charconv>
#include <cmath>

#include "json.hpp"

namespace rscale {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return {buf, res.ptr};
}

CsvWriter& CsvWriter::field(const std::string& s) {
  if (!first_) out_ << ',';
  first_ = false;
  if (s.find_first_of(",\"\n\r") == std::string::npos) {
    out_ << s;
  } else {
    out_ << '"';
    for (char c : s) {
      if (c == '"') out_ << '"';
      out_ << c;
    }
    out_ << '"';
  }
  return *this;
}

CsvWriter& CsvWriter::field(double x) { return field(format_double(x)); }

CsvWriter& CsvWriter::field(std::uint64_t x) { return field(std::to_string(x)); }

CsvWriter& CsvWriter::end_row() {
  out_ << '\n';
  first_ = true;
  return *this;
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  for (const std::string& f : fields) field(f);
  end_row();
}

void write_measure_csv(std::ostream& out, const JumpMeasure& m) {
  CsvWriter w(out);
  w.row({"rank", "size", "location", "total_mass", "tail_bound", "seed"});
  std::uint64_t rank = 0;
  for (const Jump& j : m.jumps) {
    w.field(++rank).field(j.size).field(j.location).field(m.total_mass).field(m.tail_bound).field(m.seed).end_row();
  }
}

void write_weights_csv(std::ostream& out, const RankedWeights& weights, std::uint64_t seed) {
  CsvWriter w(out);
  w.row({"rank", "weight", "deficit", "seed"});
  std::uint64_t rank = 0;
  for (double p : weights.p) w.field(++rank).field(p).field(weights.deficit).field(seed).end_row();
}

namespace {

std::string verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

}  // namespace

void write_report_csv(std::ostream& out, const std::vector<CheckResult>& checks) {
  CsvWriter w(out);
  w.row({"check", "title", "claim", "gate", "test", "seed", "n", "statistic", "threshold", "p_value", "pass",
         "claim_verdict", "note"});
  for (const CheckResult& c : checks) {
    for (const ClaimResult& cl : c.claims) {
      for (const StatReport& r : cl.runs) {
        w.field(std::to_string(c.id)).field(c.title).field(cl.label).field(cl.gate ? "gate" : "info");
        w.field(to_string(r.test)).field(r.seed).field(static_cast<std::uint64_t>(r.n));
        w.field(r.statistic).field(r.threshold).field(r.p_value ? format_double(*r.p_value) : std::string());
        w.field(verdict(r.pass)).field(verdict(cl.pass())).field(r.note).end_row();
      }
    }
  }
}

void write_report_json(std::ostream& out, const std::vector<CheckResult>& checks) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const CheckResult& c : checks) {
    nlohmann::ordered_json jc;
    jc["check"] = c.id;
    jc["title"] = c.title;
    jc["pass"] = c.pass();
    jc["budget_seconds"] = c.budget_seconds;
    jc["claims"] = nlohmann::ordered_json::array();
    for (const ClaimResult& cl : c.claims) {
      nlohmann::ordered_json jl;
      jl["claim"] = cl.label;
      jl["gate"] = cl.gate;
      jl["pass"] = cl.pass();
      jl["runs"] = nlohmann::ordered_json::array();
      for (const StatReport& r : cl.runs) {
        nlohmann::ordered_json jr;
        jr["test"] = to_string(r.test);
        jr["seed"] = r.seed;
        jr["n"] = r.n;
        jr["statistic"] = format_double(r.statistic);
        jr["threshold"] = format_double(r.threshold);
        jr["p_value"] = r.p_value ? nlohmann::ordered_json(format_double(*r.p_value)) : nlohmann::ordered_json();
        jr["pass"] = r.pass;
        if (!r.note.empty()) jr["note"] = r.note;
        jl["runs"].push_back(std::move(jr));
      }
      jc["claims"].push_back(std::move(jl));
    }
    doc.push_back(std::move(jc));
  }
  out << doc.dump(2) << '\n';
}

}  // namespace rscale
