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


// rscale: batch driver for the samplers, couplings and verification suite.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rscale/couplings.hpp"
#include "rscale/error.hpp"
#include "rscale/excursions.hpp"
#include "rscale/measures.hpp"
#include "rscale/parallel.hpp"
#include "rscale/samplers.hpp"
#include "rscale/serialize.hpp"
#include "rscale/suite.hpp"

namespace {

using namespace rscale;
using json = nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string target;
  std::string family = "gamma";
  std::string mode = "coupled";
  double alpha = 0.5;
  double theta = 0.0;
  double nu = 1.0;
  double b = 0.0;
  double a = 2.0;
  double y = 0.5;
  std::size_t n = 100000;
  std::size_t k = 10;
  std::size_t replicates = 500;
  std::string seeds = "101,202,303";
  double truncation = 1e-3;
  std::string out;
  std::string config;
  unsigned workers = 0;
  double level = 0.01;
  std::string format = "csv";
  bool quick = false;
};

// Flag name -> setter from a JSON value. Also the list of keys a config file may use.
using Setter = std::function<void(RunConfig&, const json&)>;

const std::map<std::string, Setter>& config_keys() {
  static const std::map<std::string, Setter> keys = {
      {"alpha", [](RunConfig& c, const json& v) { c.alpha = v.get<double>(); }},
      {"theta", [](RunConfig& c, const json& v) { c.theta = v.get<double>(); }},
      {"nu", [](RunConfig& c, const json& v) { c.nu = v.get<double>(); }},
      {"b", [](RunConfig& c, const json& v) { c.b = v.get<double>(); }},
      {"a", [](RunConfig& c, const json& v) { c.a = v.get<double>(); }},
      {"y", [](RunConfig& c, const json& v) { c.y = v.get<double>(); }},
      {"n", [](RunConfig& c, const json& v) { c.n = v.get<std::size_t>(); }},
      {"k", [](RunConfig& c, const json& v) { c.k = v.get<std::size_t>(); }},
      {"replicates", [](RunConfig& c, const json& v) { c.replicates = v.get<std::size_t>(); }},
      {"seeds",
       [](RunConfig& c, const json& v) {
         if (v.is_array()) {
           std::string s;
           for (const json& e : v) s += (s.empty() ? "" : ",") + std::to_string(e.get<std::uint64_t>());
           c.seeds = s;
         } else {
           c.seeds = v.is_string() ? v.get<std::string>() : std::to_string(v.get<std::uint64_t>());
         }
       }},
      {"truncation", [](RunConfig& c, const json& v) { c.truncation = v.get<double>(); }},
      {"out", [](RunConfig& c, const json& v) { c.out = v.get<std::string>(); }},
      {"workers", [](RunConfig& c, const json& v) { c.workers = v.get<unsigned>(); }},
      {"level", [](RunConfig& c, const json& v) { c.level = v.get<double>(); }},
      {"family", [](RunConfig& c, const json& v) { c.family = v.get<std::string>(); }},
      {"mode", [](RunConfig& c, const json& v) { c.mode = v.get<std::string>(); }},
      {"format", [](RunConfig& c, const json& v) { c.format = v.get<std::string>(); }},
      {"quick", [](RunConfig& c, const json& v) { c.quick = v.get<bool>(); }},
  };
  return keys;
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      seeds.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("seeds must be a comma-separated list of integers");
    }
  }
  if (seeds.empty()) throw UsageError("seeds must be non-empty");
  return seeds;
}

void check(bool ok, const std::string& msg) {
  if (!ok) throw UsageError(msg);
}

void validate(const RunConfig& c) {
  check(c.alpha > 0.0 && c.alpha < 1.0, "alpha must lie in (0, 1)");
  check(c.nu > 0.0, "nu must be positive");
  check(c.b >= 0.0, "b must be nonnegative");
  check(c.a > 0.0, "a must be positive");
  check(c.theta > -c.alpha, "theta must exceed -alpha");
  check(c.n > 0, "n must be positive");
  check(c.k > 0, "k must be positive");
  check(c.truncation > 0.0 && c.truncation < 1.0, "truncation must lie in (0, 1)");
  check(c.level > 0.0 && c.level < 1.0, "level must lie in (0, 1)");
  check(c.format == "csv" || c.format == "json", "format must be csv or json");
  parse_seeds(c.seeds);
}

void load_config(RunConfig& cfg, const std::string& path, const CLI::App& app) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(std::string("config file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw UsageError("config file must hold a flat JSON object");
  for (const auto& [key, value] : doc.items()) {
    const auto it = config_keys().find(key);
    if (it == config_keys().end()) throw UsageError("unknown config key '" + key + "'");
    // Flags given on the command line win over the file.
    if (app.count("--" + key) > 0) continue;
    try {
      it->second(cfg, value);
    } catch (const json::exception&) {
      throw UsageError("config key '" + key + "' has the wrong type");
    }
  }
}

std::string params_of(const RunConfig& c) {
  std::ostringstream os;
  os << "alpha=" << format_double(c.alpha) << ";theta=" << format_double(c.theta) << ";nu=" << format_double(c.nu)
     << ";b=" << format_double(c.b);
  return os.str();
}

// Opens --out, or stdout when empty.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  void close() {
    if (file_.is_open()) {
      file_.close();
      if (!file_) throw std::runtime_error("write failed");
    }
  }

 private:
  std::ofstream file_;
};

// Rows are produced per (seed, replicate) with independent streams, then
// written in order, so files do not depend on the worker count.
template <class Row>
void emit_rows(const RunConfig& c, std::uint64_t tag, const std::vector<std::string>& header,
               const std::function<Row(RngStream&)>& draw,
               const std::function<void(CsvWriter&, const Row&, std::uint64_t)>& write) {
  Output out(c.out);
  CsvWriter w(out.stream());
  w.row(header);
  for (std::uint64_t seed : parse_seeds(c.seeds)) {
    std::vector<Row> rows(c.n);
    parallel_for(c.n, c.workers, [&](std::size_t r) {
      RngStream rng(seed, RngStream::derive_stream_id(tag, r));
      rows[r] = draw(rng);
    });
    for (const Row& row : rows) write(w, row, seed);
  }
  out.close();
}

CumulantModel model_of(const RunConfig& c) {
  if (c.family == "gamma") return CumulantModel::gamma(c.a);
  if (c.family == "stable") return CumulantModel::stable(StableParams(c.alpha));
  if (c.family == "tilted-stable") return CumulantModel::tilted_stable(StableParams(c.alpha), c.b);
  if (c.family == "size-biased") return CumulantModel::size_biased_tilted_stable(StableParams(c.alpha), c.b);
  throw UsageError("family must be gamma, stable, tilted-stable or size-biased");
}

std::vector<std::string> weight_header(std::vector<std::string> head, std::size_t k) {
  for (std::size_t i = 1; i <= k; ++i) head.push_back("p" + std::to_string(i));
  return head;
}

void write_weights(CsvWriter& w, const RankedWeights& weights, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) w.field(i < weights.p.size() ? weights.p[i] : 0.0);
}

int run_sample(const RunConfig& c) {
  const StableParams p(c.alpha);
  const std::string params = params_of(c);
  const std::string& t = c.target;
  if (t == "pos-stable" || t == "tilted-stable" || t == "gamma") {
    emit_rows<double>(
        c, 0x5301, {"value", "seed", "params"},
        [&](RngStream& rng) {
          if (t == "pos-stable") return sample_pos_stable(rng, p);
          if (t == "gamma") return sample_gamma(rng, c.a);
          return sample_tilted_stable(rng, p, c.b);
        },
        [&](CsvWriter& w, const double& v, std::uint64_t seed) { w.field(v).field(seed).field(params).end_row(); });
  } else if (t == "thm1") {
    const XiLaw law(model_of(c), c.nu);
    emit_rows<ScalarCoupling>(
        c, 0x5302, {"xi", "T", "xiT", "seed", "params"}, [&](RngStream& rng) { return couple_scalar(rng, law); },
        [&](CsvWriter& w, const ScalarCoupling& d, std::uint64_t seed) {
          w.field(d.xi).field(d.T).field(d.xiT()).field(seed).field(params).end_row();
        });
  } else if (t == "gg" || t == "size-biased") {
    emit_rows<MeasureCoupling>(
        c, 0x5303, weight_header({"xi", "T", "xiT"}, c.k),
        [&](RngStream& rng) {
          return t == "gg" ? couple_gg_measure(rng, p, c.b, c.nu, c.truncation)
                           : couple_size_biased(rng, p, c.b, c.nu, c.truncation);
        },
        [&](CsvWriter& w, const MeasureCoupling& d, std::uint64_t) {
          w.field(d.xi).field(d.T).field(d.xiT());
          write_weights(w, d.weights, c.k);
          w.end_row();
        });
  } else if (t == "pd-bridge") {
    emit_rows<PdBridgeDraw>(
        c, 0x5304, weight_header({"xi_H", "H", "T"}, c.k),
        [&](RngStream& rng) { return couple_pd_bridge(rng, p, c.theta, c.truncation); },
        [&](CsvWriter& w, const PdBridgeDraw& d, std::uint64_t) {
          w.field(d.xi_H).field(d.H).field(d.T);
          write_weights(w, d.weights, c.k);
          w.end_row();
        });
  } else if (t == "stick-breaking") {
    emit_rows<RankedWeights>(
        c, 0x5305, weight_header({"deficit"}, c.k),
        [&](RngStream& rng) {
          StickBreakingOptions opt;
          opt.deficit_tolerance = c.truncation;
          return stick_breaking_pd(rng, c.alpha, c.theta, opt);
        },
        [&](CsvWriter& w, const RankedWeights& d, std::uint64_t) {
          w.field(d.deficit);
          write_weights(w, d, c.k);
          w.end_row();
        });
  } else if (t == "xi-h") {
    emit_rows<XiHPair>(
        c, 0x5306, {"xi_H", "H", "seed", "params"}, [&](RngStream& rng) { return sample_xi_H_pair(rng, p, c.theta); },
        [&](CsvWriter& w, const XiHPair& d, std::uint64_t seed) {
          w.field(d.xi).field(d.H).field(seed).field(params).end_row();
        });
  } else if (t == "stable-gamma") {
    emit_rows<StableGammaDraw>(
        c, 0x5307, {"zeta", "total", "scaled", "partial", "seed", "params"},
        [&](RngStream& rng) { return stable_gamma_path_draw(rng, p, c.theta, c.y); },
        [&](CsvWriter& w, const StableGammaDraw& d, std::uint64_t seed) {
          w.field(d.zeta).field(d.total).field(d.scaled).field(d.partial).field(seed).field(params).end_row();
        });
  } else if (t == "gg-measure") {
    // One measure from the first seed; the jump table is the output.
    RngStream rng(parse_seeds(c.seeds).front(), 0x5308);
    const JumpMeasure m = sample_gg_measure(rng, p, c.b, c.truncation);
    Output out(c.out);
    write_measure_csv(out.stream(), m);
    out.close();
  } else {
    throw UsageError("unknown sample target '" + t +
                     "' (pos-stable, tilted-stable, gamma, thm1, gg, size-biased, pd-bridge, stick-breaking, xi-h, "
                     "stable-gamma, gg-measure)");
  }
  return kExitPass;
}

int run_excursion(const RunConfig& c) {
  const std::string params = params_of(c);
  const LevyDensityModel base = LevyDensityModel::power_law(c.alpha / std::tgamma(1.0 - c.alpha), c.alpha, 0.0);
  std::string tag = "n/a";
  std::unique_ptr<ThreeCaseModel> tc;
  try {
    tc = std::make_unique<ThreeCaseModel>(three_case_model(c.alpha, c.nu, c.b));
    tag = to_string(tc->tag);
  } catch (const DomainError&) {
    if (c.mode != "coupled") throw;
  }
  const std::vector<std::string> header{"xi", "O", "U", "Delta", "xiDelta", "case_tag", "seed", "params"};
  auto write = [&](CsvWriter& w, const ExcursionCoupling& d, std::uint64_t seed) {
    w.field(d.xi).field(d.triple.overshoot).field(d.triple.undershoot).field(d.triple.duration);
    w.field(d.xi_duration()).field(tag).field(seed).field(params).end_row();
  };
  if (c.mode == "coupled") {
    const ExcursionCoupler coupler(base, c.b, c.nu);
    emit_rows<ExcursionCoupling>(c, 0x5401, header, [&](RngStream& rng) { return coupler.sample(rng); }, write);
  } else if (c.mode == "direct") {
    const ExcursionSampler sampler(tc->model);
    emit_rows<ExcursionCoupling>(
        c, 0x5402, header, [&](RngStream& rng) { return ExcursionCoupling{0.0, sampler.sample(rng)}; }, write);
  } else if (c.mode == "oracle") {
    emit_rows<ExcursionCoupling>(
        c, 0x5403, header,
        [&](RngStream& rng) { return ExcursionCoupling{0.0, sample_excursion_path_oracle(rng, tc->model)}; }, write);
  } else {
    throw UsageError("mode must be coupled, direct or oracle");
  }
  return kExitPass;
}

int run_diversity(const RunConfig& c) {
  struct Row {
    std::size_t blocks;
    double estimate;
  };
  RunConfig rc = c;
  rc.n = c.replicates;
  emit_rows<Row>(
      rc, 0x5501, {"blocks", "customers", "diversity", "seed", "params"},
      [&](RngStream& rng) {
        const PartitionState part = crp_partition(rng, c.alpha, c.theta, c.n);
        return Row{part.blocks(), diversity_estimate(part, c.alpha)};
      },
      [&](CsvWriter& w, const Row& r, std::uint64_t seed) {
        w.field(static_cast<std::uint64_t>(r.blocks)).field(static_cast<std::uint64_t>(c.n)).field(r.estimate);
        w.field(seed).field(params_of(c)).end_row();
      });
  return kExitPass;
}

void print_summary(const CheckResult& r) {
  for (const ClaimResult& cl : r.claims) {
    const MajorityVerdict v = majority(cl.runs);
    std::cout << cl.label << ": " << (cl.pass() ? "PASS" : "FAIL") << " (" << v.passed << "/" << v.runs << " seeds"
              << (cl.gate ? "" : ", recorded only") << ")\n";
  }
  if (r.budget_seconds > 0.0 && !r.within_budget())
    std::cout << "  time budget exceeded: " << r.seconds << " s > " << r.budget_seconds << " s\n";
}

int finish_checks(const RunConfig& c, const std::vector<CheckResult>& checks) {
  if (!c.out.empty()) {
    Output out(c.out);
    if (c.format == "json") write_report_json(out.stream(), checks);
    else write_report_csv(out.stream(), checks);
    out.close();
  }
  bool ok = true;
  for (const CheckResult& r : checks) ok = ok && r.pass();
  return ok ? kExitPass : kExitFail;
}

int run_verify(const RunConfig& c) {
  SuiteOptions opt;
  VerifyConfig& v = opt.config;
  v.seeds = parse_seeds(c.seeds);
  v.n = c.n;
  v.n_pairs = std::min<std::size_t>(2000, c.n);
  v.n_compare = std::min<std::size_t>(10000, c.n);
  v.level = c.level;
  v.truncation = c.truncation;
  v.workers = c.workers;
  const StableParams p(c.alpha);
  const std::string& t = c.target;

  auto on_done = [](const CheckResult& r) {
    std::cout << "[" << r.id << "] " << r.title << " (" << r.seconds << " s)\n";
    print_summary(r);
  };
  if (t == "all") {
    std::vector<CheckResult> checks = run_acceptance(opt, on_done);
    if (!c.quick) {
      std::vector<CheckResult> more = run_extended(opt, on_done);
      checks.insert(checks.end(), more.begin(), more.end());
    }
    return finish_checks(c, checks);
  }
  if (t == "extended") return finish_checks(c, run_extended(opt, on_done));
  if (t == "acceptance") {
    check(c.k >= 1 && c.k <= acceptance_titles().size(), "k selects an acceptance criterion between 1 and 11");
    CheckResult r = run_acceptance_criterion(static_cast<int>(c.k), opt);
    on_done(r);
    return finish_checks(c, {r});
  }

  std::function<std::vector<ClaimResult>()> run;
  if (t == "thm1" || t == "scalar") run = [&] { return verify_scalar_coupling(model_of(c), c.nu, v); };
  else if (t == "gg") run = [&] { return verify_gg_coupling(p, c.b, c.nu, v); };
  else if (t == "size-biased") run = [&] { return verify_size_biased(p, c.b, c.nu, v); };
  else if (t == "pd-bridge") run = [&] { return verify_pd_bridge(p, c.theta, v); };
  else if (t == "beta-gamma") run = [&] { return verify_beta_gamma_pair(p, c.theta, v); };
  else if (t == "diversity") run = [&] { return verify_diversity(p, c.theta, c.replicates, 10000, 0.05, v); };
  else if (t == "excursion") run = [&] { return verify_excursion(p, c.nu, c.b, v); };
  else if (t == "stable-gamma") run = [&] { return verify_stable_gamma(p, c.theta, c.y, v); };
  else if (t == "kernels") run = [] { return verify_kernels(); };
  else if (t == "factorization") run = [] { return verify_factorization(); };
  else if (t == "calibration") run = [&] { return verify_calibration(200, v.seeds.front(), c.level, c.workers); };
  else
    throw UsageError("unknown verify target '" + t +
                     "' (thm1, scalar, gg, size-biased, pd-bridge, beta-gamma, diversity, excursion, stable-gamma, kernels, "
                     "factorization, calibration, acceptance, extended, all)");

  CheckResult r;
  r.title = t;
  r.claims = run();
  print_summary(r);
  return finish_checks(c, {r});
}

int run_report(const RunConfig& c) {
  std::ifstream in(c.target);
  if (!in) throw std::runtime_error("cannot read report " + c.target);
  const json doc = json::parse(in);
  std::vector<CheckResult> checks;
  for (const json& jc : doc) {
    CheckResult r;
    r.id = jc.at("check").get<int>();
    r.title = jc.at("title").get<std::string>();
    for (const json& jl : jc.at("claims")) {
      ClaimResult cl;
      cl.label = jl.at("claim").get<std::string>();
      cl.gate = jl.at("gate").get<bool>();
      for (const json& jr : jl.at("runs")) {
        StatReport s;
        s.claim = cl.label;
        s.seed = jr.at("seed").get<std::uint64_t>();
        s.n = jr.at("n").get<std::size_t>();
        s.statistic = std::stod(jr.at("statistic").get<std::string>());
        s.threshold = std::stod(jr.at("threshold").get<std::string>());
        if (!jr.at("p_value").is_null()) s.p_value = std::stod(jr.at("p_value").get<std::string>());
        s.pass = jr.at("pass").get<bool>();
        if (jr.contains("note")) s.note = jr.at("note").get<std::string>();
        const std::string kind = jr.at("test").get<std::string>();
        for (TestKind k : {TestKind::KS1, TestKind::KS2, TestKind::DistCorrPerm, TestKind::MomentCI,
                           TestKind::Chi2Binned, TestKind::NumericTolerance})
          if (to_string(k) == kind) s.test = k;
        cl.runs.push_back(std::move(s));
      }
      r.claims.push_back(std::move(cl));
    }
    std::cout << "[" << r.id << "] " << r.title << "\n";
    print_summary(r);
    checks.push_back(std::move(r));
  }
  if (!c.out.empty()) {
    Output out(c.out);
    if (c.format == "json") write_report_json(out.stream(), checks);
    else write_report_csv(out.stream(), checks);
    out.close();
  }
  bool ok = true;
  for (const CheckResult& r : checks)
    for (const ClaimResult& cl : r.claims) ok = ok && (!cl.gate || cl.pass());
  return ok ? kExitPass : kExitFail;
}

void add_common(CLI::App* app, RunConfig& c) {
  app->add_option("--alpha", c.alpha, "stability index in (0, 1)");
  app->add_option("--theta", c.theta, "Poisson-Dirichlet concentration, > -alpha");
  app->add_option("--nu", c.nu, "polynomial tilt order, > 0");
  app->add_option("--b", c.b, "exponential tilt, >= 0");
  app->add_option("--a", c.a, "Gamma shape for --family gamma");
  app->add_option("--y", c.y, "split time of the subordinator path in (0, 1]");
  app->add_option("--n", c.n, "draws per seed");
  app->add_option("--k", c.k, "weights per row, or the acceptance criterion for 'verify acceptance'");
  app->add_option("--replicates", c.replicates, "restaurant replicates for diversity runs");
  app->add_option("--seeds", c.seeds, "comma-separated seeds");
  app->add_option("--truncation", c.truncation, "relative truncation of jump measures and stick breaking");
  app->add_option("--out", c.out, "output file (stdout for samples when empty)");
  app->add_option("--config", c.config, "flat JSON config; flags win");
  app->add_option("--workers", c.workers, "worker threads, 0 = all cores");
  app->add_option("--level", c.level, "test level");
  app->add_option("--family", c.family, "gamma, stable, tilted-stable or size-biased");
  app->add_option("--mode", c.mode, "excursion sampler: coupled, direct or oracle");
  app->add_option("--format", c.format, "report format: csv or json");
  app->add_flag("--quick", c.quick, "verify all: acceptance criteria only");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rscale: random scaling couplings, samplers and checks"};
  app.require_subcommand(1);
  RunConfig cfg;

  struct Command {
    const char* name;
    const char* help;
    bool positional;
  };
  const Command commands[] = {
      {"sample", "draw samples to CSV", true},
      {"verify", "run a verification and write a report", true},
      {"excursion", "draw excursion triples to CSV", false},
      {"diversity", "draw restaurant partitions and diversity estimates", false},
      {"report", "summarize a JSON report written by verify", true},
  };
  std::vector<CLI::App*> subs;
  for (const Command& cmd : commands) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    if (cmd.positional) sub->add_option("target", cfg.target, "what to sample, verify or read")->required();
    add_common(sub, cfg);
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  CLI::App* used = nullptr;
  for (CLI::App* s : subs)
    if (s->parsed()) used = s;
  cfg.command = used->get_name();

  try {
    if (!cfg.config.empty()) load_config(cfg, cfg.config, *used);
    validate(cfg);
    if (cfg.command == "sample") return run_sample(cfg);
    if (cfg.command == "verify") return run_verify(cfg);
    if (cfg.command == "excursion") return run_excursion(cfg);
    if (cfg.command == "diversity") return run_diversity(cfg);
    return run_report(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedFamily& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
