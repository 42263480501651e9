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


#include <cstdlib>
#include <sstream>

#include <gtest/gtest.h>

#include "rscale/serialize.hpp"

using namespace rscale;

TEST(Serialize, DoubleRoundTrip) {
  for (double x : {0.1, 1.0 / 3.0, 6.02214076e23, -2.5e-310, 1e-7}) {
    const std::string s = format_double(x);
    EXPECT_EQ(std::strtod(s.c_str(), nullptr), x) << s;
    EXPECT_EQ(s.find(','), std::string::npos);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
}

TEST(Serialize, CsvQuoting) {
  std::ostringstream os;
  CsvWriter w(os);
  w.field(std::string("a,b")).field(std::string("say \"hi\"")).field(1.5).end_row();
  EXPECT_EQ(os.str(), "\"a,b\",\"say \"\"hi\"\"\",1.5\n");
}

TEST(Serialize, MeasureCsv) {
  JumpMeasure m;
  m.jumps = {{3.0, 0.25}, {1.0, 0.5}};
  m.total_mass = 4.0;
  m.tail_bound = 0.0;
  m.seed = 9;
  std::ostringstream os;
  write_measure_csv(os, m);
  EXPECT_EQ(os.str(), "rank,size,location,total_mass,tail_bound,seed\n1,3,0.25,4,0,9\n2,1,0.5,4,0,9\n");
}

TEST(Serialize, ReportIsDeterministic) {
  CheckResult c;
  c.id = 1;
  c.title = "t";
  ClaimResult cl;
  cl.label = "claim";
  StatReport r;
  r.statistic = 0.01;
  r.threshold = 0.02;
  r.p_value = 0.5;
  r.pass = true;
  r.n = 100;
  cl.runs = {r, r, r};
  c.claims = {cl};
  std::ostringstream a, b, j;
  write_report_csv(a, {c});
  write_report_csv(b, {c});
  EXPECT_EQ(a.str(), b.str());
  write_report_json(j, {c});
  EXPECT_NE(j.str().find("\"claim\": \"claim\""), std::string::npos);
}
