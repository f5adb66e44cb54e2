// Copyright 2026 The gcover Authors
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

// gcover: solve, verify, trace, bench and generate minimum weight cover
// instances.
//
// Exit codes: 0 success, 1 a checked invariant failed, 2 usage or input
// error.

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gcover/gcover.hpp"

namespace {

using gcover::format_double;
using Json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";
constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitUsage = 2;

// Usage or input problem detected after argument parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "table";
  std::size_t oracle_cap = gcover::kDefaultOracleCap;
};

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i)
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return hex.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// --- instances ---------------------------------------------------------------

struct LoadedInstance {
  std::string path;
  std::string sha256;
  std::string kind;
  std::optional<gcover::CoverProblem> problem;
};

LoadedInstance load_instance(const std::string& path, const std::string& kind) {
  LoadedInstance li;
  li.path = path;
  li.kind = kind;
  const std::string text = read_file(path);
  li.sha256 = sha256_hex(text);
  const std::string name = std::filesystem::path(path).stem().string();
  std::istringstream in(text);
  if (kind == "setcover") {
    li.problem.emplace(gcover::set_cover_problem(gcover::read_set_system(in, name)));
  } else if (kind == "vertexcover") {
    li.problem.emplace(gcover::vertex_cover_problem(gcover::read_graph(in), {}, name));
  } else if (kind == "cds") {
    li.problem.emplace(gcover::cds_problem(gcover::read_graph(in), name));
  } else if (kind == "wcoverage") {
    li.problem.emplace(
        gcover::weighted_coverage_problem(gcover::read_weighted_coverage(in, name)));
  } else {
    throw UsageError("unknown kind '" + kind + "'");
  }
  return li;
}

std::string members_1based(const gcover::BitSet& s) {
  std::string out;
  s.for_each([&](std::size_t v) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v + 1);
  });
  return out;
}

std::string feasibility(const gcover::CoverProblem& p, const gcover::BitSet& s) {
  const double g = p.g(s);
  if (p.is_feasible_value(g)) return "feasible";
  if (p.level_of(g) == 0) return "nearly_feasible";
  return "infeasible";
}

// --- output ------------------------------------------------------------------

void emit_table(const gcover::Table& t, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    t.write_csv(out);
  } else {
    t.write_text(out);
  }
}

void write_csv_file(const std::filesystem::path& path, const gcover::Table& t) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path.string() + "'");
  t.write_csv(f);
}

std::filesystem::path prepare_out_dir(const std::string& out) {
  std::filesystem::path dir(out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw UsageError("cannot create output directory '" + out + "': " + ec.message());
  return dir;
}

Json manifest_base(const std::string& subcommand, const GlobalOptions& g) {
  Json m;
  m["tool"] = "gcover";
  m["version"] = kVersion;
  m["subcommand"] = subcommand;
  m["rng"] = std::string(gcover::RngStream::kAlgorithm);
  m["seed"] = g.seed;
  m["format"] = g.format;
  m["oracle_cap"] = g.oracle_cap;
  return m;
}

void write_manifest(const std::filesystem::path& dir, Json m, const std::string& started) {
  m["started_at"] = started;
  m["finished_at"] = utc_now();
  std::ofstream f(dir / "manifest.json", std::ios::binary);
  if (!f) throw UsageError("cannot write manifest");
  f << m.dump(2) << '\n';
}

// --- reference optimum -------------------------------------------------------

struct Reference {
  double opt = 0.0;
  std::string source;  // "oracle" or "value"
};

std::optional<Reference> reference_opt(const gcover::CoverProblem& p, std::optional<double> opt,
                                       bool oracle, gcover::CoverMode mode, std::size_t cap) {
  if (opt) {
    if (!(*opt >= 0.0)) throw UsageError("--opt must be nonnegative");
    return Reference{*opt, "value"};
  }
  if (!oracle) return std::nullopt;
  try {
    return Reference{gcover::exact_opt(p, mode, cap).opt_cost, "oracle"};
  } catch (const gcover::TooLarge& e) {
    throw UsageError(e.what());
  }
}

// --- solve -------------------------------------------------------------------

struct SolveArgs {
  std::string instance;
  std::string kind;
  std::string alg = "greedy";
  std::optional<std::uint64_t> iterations;
  double safety = 10.0;
  std::optional<double> opt;
  bool oracle = false;
};

int cmd_solve(const GlobalOptions& g, const SolveArgs& a) {
  const std::string started = utc_now();
  LoadedInstance li = load_instance(a.instance, a.kind);
  const gcover::CoverProblem& p = *li.problem;
  gcover::Table t({"field", "value"});
  t.add_row({"instance", p.name()});
  t.add_row({"kind", a.kind});
  t.add_row({"algorithm", a.alg});
  t.add_row({"n", std::to_string(p.n())});
  t.add_row({"beta", std::to_string(p.beta())});
  t.add_row({"delta", format_double(p.delta())});
  t.add_row({"delta_source", std::string(gcover::to_string(p.delta_source()))});
  t.add_row({"p", format_double(p.p_param())});

  std::optional<gcover::BitSet> solution;
  double cost = 0.0;
  std::uint64_t iterations = 0;
  bool integer_bound = false;
  if (a.alg == "greedy") {
    const gcover::GreedyResult r = gcover::greedy_solve(p);
    solution = r.solution;
    cost = r.cost;
  } else {
    iterations = a.iterations.value_or(gcover::default_iterations(p, a.safety));
    gcover::GsemoConfig cfg;
    cfg.iterations = iterations;
    cfg.seed = g.seed;
    const gcover::RunResult r = gcover::run(p, cfg);
    t.add_row({"seed", std::to_string(g.seed)});
    t.add_row({"iterations", std::to_string(iterations)});
    t.add_row({"first_feasible_iteration",
               r.stats.first_feasible_iteration
                   ? std::to_string(*r.stats.first_feasible_iteration)
                   : "none"});
    if (r.best) {
      solution = r.best->bits();
      cost = r.best->f2();
    } else {
      t.add_row({"min_f1_member", members_1based(r.min_f1_member.bits())});
      t.add_row({"min_f1", format_double(r.min_f1_member.f1())});
    }
    integer_bound = p.integer_mode();
  }
  if (!solution) {
    t.add_row({"cost", "none"});
    t.add_row({"mode", "none"});
  } else {
    t.add_row({"cost", format_double(cost)});
    t.add_row({"members", members_1based(*solution)});
    t.add_row({"mode", feasibility(p, *solution)});
  }

  const gcover::CoverMode mode = (a.alg == "gsemo" && !p.integer_mode())
                                     ? gcover::CoverMode::kNearlyFeasible
                                     : gcover::CoverMode::kFeasible;
  if (auto ref = reference_opt(p, a.opt, a.oracle, mode, g.oracle_cap)) {
    t.add_row({"opt", format_double(ref->opt)});
    t.add_row({"opt_source", ref->source});
    if (solution && ref->opt > 0.0) {
      t.add_row({"ratio", format_double(cost / ref->opt)});
      std::string bound_name;
      std::optional<double> bound;
      try {
        if (a.alg == "greedy") {
          bound_name = "greedy";
          bound = gcover::greedy_ratio_bound(p, ref->opt);
        } else {
          bound_name = integer_bound ? "gsemo_integer" : "gsemo_general";
          bound = gcover::gsemo_ratio_bound(p, ref->opt);
        }
      } catch (const gcover::DegenerateOpt&) {
        bound_name += " (undefined: opt <= delta)";
      }
      t.add_row({"bound_name", bound_name});
      t.add_row({"bound", bound ? format_double(*bound) : "none"});
      t.add_row({"within_bound",
                 bound ? (gcover::within_ratio(cost, ref->opt, *bound) ? "yes" : "no") : "n/a"});
    }
  }
  emit_table(t, g.format, std::cout);
  if (!g.out.empty()) {
    const auto dir = prepare_out_dir(g.out);
    write_csv_file(dir / "solve.csv", t);
    Json m = manifest_base("solve", g);
    m["instance"] = {{"path", li.path}, {"sha256", li.sha256}, {"kind", a.kind}};
    m["config"] = {{"algorithm", a.alg}, {"iterations", iterations}, {"safety", a.safety}};
    if (a.opt) m["config"]["opt"] = *a.opt;
    m["config"]["oracle"] = a.oracle;
    write_manifest(dir, m, started);
  }
  return kExitOk;
}

// --- trace -------------------------------------------------------------------

struct TraceArgs {
  std::string instance;
  std::string kind;
  std::optional<std::uint64_t> iterations;
  double safety = 10.0;
  std::optional<double> opt;
  bool oracle = false;
};

int cmd_trace(const GlobalOptions& g, const TraceArgs& a) {
  const std::string started = utc_now();
  LoadedInstance li = load_instance(a.instance, a.kind);
  const gcover::CoverProblem& p = *li.problem;
  const auto mode =
      p.integer_mode() ? gcover::CoverMode::kFeasible : gcover::CoverMode::kNearlyFeasible;
  std::optional<Reference> ref = reference_opt(p, a.opt, a.oracle, mode, g.oracle_cap);
  if (!ref) {
    if (p.beta() > 0) throw UsageError("trace needs --opt VALUE or --oracle");
    ref = Reference{0.0, "none"};
  }
  gcover::GsemoConfig cfg;
  cfg.iterations = a.iterations.value_or(gcover::default_iterations(p, a.safety));
  cfg.seed = g.seed;
  cfg.trace_level = gcover::TraceLevel::kFull;
  cfg.check_invariants = true;
  const gcover::RunResult r = gcover::run(p, cfg);
  const gcover::BinAnalysis an = gcover::analyze_run(p, r.trace, ref->opt);
  const gcover::BinDiagnostics& d = an.diagnostics;

  gcover::Table summary({"field", "value"});
  summary.add_row({"instance", p.name()});
  summary.add_row({"seed", std::to_string(g.seed)});
  summary.add_row({"iterations", std::to_string(cfg.iterations)});
  summary.add_row({"beta", std::to_string(p.beta())});
  summary.add_row({"opt", format_double(ref->opt)});
  summary.add_row({"opt_source", ref->source});
  summary.add_row({"phase_boundary", std::to_string(an.boundary)});
  summary.add_row({"final_tracker", std::to_string(an.final_tracker)});
  summary.add_row({"hitting_iteration",
                   an.hitting_iteration ? std::to_string(*an.hitting_iteration) : "none"});
  summary.add_row({"phase_two_iteration",
                   an.phase_two_iteration ? std::to_string(*an.phase_two_iteration) : "none"});
  summary.add_row({"events", std::to_string(an.events.size())});
  summary.add_row({"pi1_failures", std::to_string(d.pi1_failures)});
  summary.add_row({"pi2_failures", std::to_string(d.pi2_failures)});
  summary.add_row({"bridge_failures", std::to_string(d.bridge_failures)});
  summary.add_row({"membership_failures", std::to_string(d.membership_failures)});
  summary.add_row({"zero_bin_failures", std::to_string(d.zero_bin_failures)});
  summary.add_row({"tracker_increases", std::to_string(d.tracker_increases)});
  emit_table(summary, g.format, std::cout);

  const gcover::Table events = gcover::track_event_table(an.events);
  if (!g.out.empty()) {
    const auto dir = prepare_out_dir(g.out);
    write_csv_file(dir / "run_trace.csv", gcover::run_trace_table(r.trace));
    write_csv_file(dir / "events.csv", events);
    write_csv_file(dir / "summary.csv", summary);
    Json m = manifest_base("trace", g);
    m["instance"] = {{"path", li.path}, {"sha256", li.sha256}, {"kind", a.kind}};
    m["config"] = {{"iterations", cfg.iterations}, {"safety", a.safety},
                   {"opt", ref->opt},          {"opt_source", ref->source}};
    write_manifest(dir, m, started);
  } else {
    std::cout << '\n';
    emit_table(events, g.format, std::cout);
  }
  if (!d.ok() && d.tracker_increases == 0 && d.replay_mismatches == 0)
    std::cerr << "warning: quality conditions failed; the supplied opt may be wrong\n";
  return (d.tracker_increases == 0 && d.replay_mismatches == 0) ? kExitOk : kExitInvariant;
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::size_t cap = 6;
  std::size_t cases = 50;
};

int cmd_verify(const GlobalOptions& g, const VerifyArgs& a) {
  const std::string started = utc_now();
  gcover::VerifyOptions o;
  o.cap = a.cap;
  o.cases = a.cases;
  o.seed = g.seed;
  const gcover::VerifyReport rep = gcover::run_verify_suite(a.suite, o);
  gcover::Table summary({"suite", "cases", "checks", "skipped", "failures", "result"});
  summary.add_row({rep.suite, std::to_string(rep.cases), std::to_string(rep.checks),
                   std::to_string(rep.skipped), std::to_string(rep.failures.size()),
                   rep.passed() ? "pass" : "fail"});
  emit_table(summary, g.format, std::cout);
  gcover::Table failures({"suite", "check", "detail", "instance"});
  for (const auto& f : rep.failures) failures.add_row({rep.suite, f.check, f.detail, f.instance});
  if (!g.out.empty()) {
    const auto dir = prepare_out_dir(g.out);
    write_csv_file(dir / "verify.csv", summary);
    write_csv_file(dir / "failures.csv", failures);
    Json m = manifest_base("verify", g);
    m["config"] = {{"suite", a.suite}, {"cap", a.cap}, {"cases", a.cases}};
    write_manifest(dir, m, started);
  } else if (!rep.passed()) {
    std::cout << '\n';
    failures.write_csv(std::cout);
  }
  return rep.passed() ? kExitOk : kExitInvariant;
}

// --- bench -------------------------------------------------------------------

struct BenchArgs {
  std::string family;
  std::vector<std::size_t> sizes;
  std::size_t trials = 20;
  double safety = 10.0;
  std::size_t jobs = 1;
};

struct TrialOutcome {
  std::int64_t beta = 0;
  std::size_t n = 0;
  std::uint64_t budget = 0;
  std::optional<std::uint64_t> hit;
  bool feasible = false;
  std::optional<double> ratio;
  std::optional<double> bound;
  bool within = false;
};

gcover::CoverProblem bench_instance(const std::string& family, std::size_t size,
                                    std::uint64_t seed) {
  if (family == "setcover")
    return gcover::set_cover_problem(gcover::random_set_cover(size, size, 0.3, {1.0, 1.0}, seed));
  if (family == "cds")
    return gcover::cds_problem(gcover::random_connected_graph(size, 0.3, seed),
                               "cds-" + std::to_string(seed));
  return gcover::weighted_coverage_problem(
      gcover::random_weighted_coverage(size, size, 0.3, {0.25, 1.0}, {1.0, 2.0}, seed));
}

TrialOutcome bench_trial(const BenchArgs& a, std::size_t size, std::uint64_t seed,
                         std::size_t cap) {
  const gcover::CoverProblem p = bench_instance(a.family, size, seed);
  TrialOutcome out;
  out.beta = p.beta();
  out.n = p.n();
  gcover::GsemoConfig cfg;
  cfg.iterations = gcover::default_iterations(p, a.safety);
  cfg.seed = gcover::derive_seed(seed, 1);
  out.budget = cfg.iterations;
  const gcover::RunResult r = gcover::run(p, cfg);
  out.hit = r.stats.first_feasible_iteration;
  out.feasible = r.best.has_value();
  if (p.n() <= cap && r.best) {
    const auto mode =
        p.integer_mode() ? gcover::CoverMode::kFeasible : gcover::CoverMode::kNearlyFeasible;
    const double opt = gcover::exact_opt(p, mode, cap).opt_cost;
    if (opt > 0.0) {
      out.ratio = r.best->f2() / opt;
      try {
        out.bound = gcover::gsemo_ratio_bound(p, opt);
        out.within = gcover::within_ratio(r.best->f2(), opt, *out.bound);
      } catch (const gcover::DegenerateOpt&) {
      }
    }
  }
  return out;
}

int cmd_bench(const GlobalOptions& g, const BenchArgs& a) {
  const std::string started = utc_now();
  if (a.sizes.empty()) throw UsageError("--sizes needs at least one value");
  if (a.trials < 1) throw UsageError("--trials must be >= 1");
  const bool spread = a.trials > 1;
  std::vector<std::string> header = {"size", "trials", "feasible", "hit_mean"};
  if (spread) header.insert(header.end(), {"hit_sd", "hit_p95"});
  header.insert(header.end(), {"hit_bound", "censored", "ratio_mean"});
  if (spread) header.push_back("ratio_max");
  header.insert(header.end(), {"bound_min", "within_bound"});
  gcover::Table t(header);

  for (std::size_t s = 0; s < a.sizes.size(); ++s) {
    const std::size_t size = a.sizes[s];
    std::vector<TrialOutcome> outcomes(a.trials);
    std::vector<std::string> errors(a.trials);
    auto work = [&](std::size_t worker) {
      for (std::size_t i = worker; i < a.trials; i += std::max<std::size_t>(a.jobs, 1)) {
        try {
          outcomes[i] = bench_trial(a, size, gcover::derive_seed(g.seed, s * 1000003 + i),
                                    g.oracle_cap);
        } catch (const std::exception& e) {
          errors[i] = e.what();
        }
      }
    };
    const std::size_t workers = std::clamp<std::size_t>(a.jobs, 1, a.trials);
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work, w);
    work(0);
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
      if (!e.empty()) throw UsageError(e);

    double bound_sum = 0.0, ratio_sum = 0.0, ratio_max = 0.0;
    double bound_min = std::numeric_limits<double>::infinity();
    std::size_t feasible = 0, rated = 0, bounded = 0, within = 0;
    for (const auto& o : outcomes) {
      bound_sum += gcover::expected_hitting_bound(o.beta, o.n);
      feasible += o.feasible ? 1 : 0;
      if (o.ratio) {
        ++rated;
        ratio_sum += *o.ratio;
        ratio_max = std::max(ratio_max, *o.ratio);
      }
      if (o.bound) {
        ++bounded;
        bound_min = std::min(bound_min, *o.bound);
        within += o.within ? 1 : 0;
      }
    }
    // Censored runs count at their own budget.
    std::vector<double> xs;
    std::size_t censored = 0;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (!outcomes[i].hit) ++censored;
      xs.push_back(static_cast<double>(outcomes[i].hit.value_or(outcomes[i].budget)));
    }
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double sd = 0.0;
    if (xs.size() > 1) {
      for (double x : xs) sd += (x - mean) * (x - mean);
      sd = std::sqrt(sd / static_cast<double>(xs.size() - 1));
    }
    std::sort(xs.begin(), xs.end());
    const double p95 =
        xs[static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(xs.size()))) - 1];

    std::vector<std::string> row = {std::to_string(size), std::to_string(a.trials),
                                    format_double(static_cast<double>(feasible) /
                                                  static_cast<double>(a.trials)),
                                    format_double(mean)};
    if (spread) row.insert(row.end(), {format_double(sd), format_double(p95)});
    row.insert(row.end(),
               {format_double(bound_sum / static_cast<double>(a.trials)),
                std::to_string(censored),
                rated ? format_double(ratio_sum / static_cast<double>(rated)) : ""});
    if (spread) row.push_back(rated ? format_double(ratio_max) : "");
    row.insert(row.end(),
               {bounded ? format_double(bound_min) : "",
                bounded ? format_double(static_cast<double>(within) /
                                        static_cast<double>(bounded))
                        : ""});
    t.add_row(row);
  }
  emit_table(t, g.format, std::cout);
  if (!g.out.empty()) {
    const auto dir = prepare_out_dir(g.out);
    write_csv_file(dir / "bench.csv", t);
    Json m = manifest_base("bench", g);
    m["config"] = {{"family", a.family},
                   {"sizes", a.sizes},
                   {"trials", a.trials},
                   {"safety", a.safety},
                   {"jobs", a.jobs}};
    write_manifest(dir, m, started);
  }
  return kExitOk;
}

// --- gen ---------------------------------------------------------------------

struct GenArgs {
  std::string family;
  std::size_t n = 8;          // vertices (graph)
  double edge_prob = 0.3;     // graph
  std::size_t elements = 10;  // setcover universe
  std::size_t items = 10;     // wcoverage items
  std::size_t sets = 8;
  double density = 0.3;
  double cost_min = 1.0;
  double cost_max = 1.0;
  double value_min = 0.25;
  double value_max = 1.0;
};

int cmd_gen(const GlobalOptions& g, const GenArgs& a) {
  std::ostringstream text;
  try {
    if (a.family == "graph") {
      gcover::write_graph(text, gcover::random_connected_graph(a.n, a.edge_prob, g.seed));
    } else if (a.family == "setcover") {
      gcover::write_set_system(text, gcover::random_set_cover(a.elements, a.sets, a.density,
                                                              {a.cost_min, a.cost_max}, g.seed));
    } else {
      gcover::write_weighted_coverage(
          text, gcover::random_weighted_coverage(a.items, a.sets, a.density,
                                                 {a.value_min, a.value_max},
                                                 {a.cost_min, a.cost_max}, g.seed));
    }
  } catch (const gcover::InvalidArgument& e) {
    throw UsageError(e.what());
  }
  const std::string bytes = text.str();
  const std::string hash = sha256_hex(bytes);
  if (g.out.empty()) {
    std::cout << bytes;
    std::cerr << "sha256 " << hash << '\n';
  } else {
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + g.out + "'");
    f << bytes;
    std::cout << "sha256 " << hash << "  " << g.out << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum weight general cover: greedy and GSEMO solvers, exact oracle, "
               "bin-tracking analysis and self-checks.\n"
               "Exit codes: 0 ok, 1 invariant failure, 2 usage or input error."};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--out", g.out,
                 "Output directory for CSV files and manifest.json (gen: instance file)");
  app.add_option("--format", g.format, "Console format")
      ->check(CLI::IsMember({"csv", "table"}))
      ->capture_default_str();
  app.add_option("--oracle-cap", g.oracle_cap, "Largest n the exact oracle accepts")
      ->capture_default_str();

  const std::vector<std::string> kinds = {"setcover", "vertexcover", "cds", "wcoverage"};

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve an instance with greedy or GSEMO.\n"
                                        "Report rows: field,value.");
  s->add_option("instance", solve.instance, "Instance file")->required();
  s->add_option("--kind", solve.kind, "Problem kind")->required()->check(CLI::IsMember(kinds));
  s->add_option("--alg", solve.alg, "Algorithm")
      ->check(CLI::IsMember({"greedy", "gsemo"}))
      ->capture_default_str();
  s->add_option("--iterations", solve.iterations, "GSEMO iterations (default from --safety)");
  s->add_option("--safety", solve.safety, "Safety factor on e*beta*(beta+1)*n")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* s_opt = s->add_option("--opt", solve.opt, "Reference optimum (raw cost)");
  s->add_flag("--oracle", solve.oracle, "Compute the optimum exactly")->excludes(s_opt);

  TraceArgs trace;
  auto* tr = app.add_subcommand(
      "trace", "Run GSEMO with bin tracking.\n"
               "events.csv: iteration,kind,bin,f1,f2,tracker,phase\n"
               "run_trace.csv: iteration,parent,flipped,f1,f2,level,inserted,evicted,"
               "archive_size");
  tr->add_option("instance", trace.instance, "Instance file")->required();
  tr->add_option("--kind", trace.kind, "Problem kind")->required()->check(CLI::IsMember(kinds));
  tr->add_option("--iterations", trace.iterations, "GSEMO iterations");
  tr->add_option("--safety", trace.safety, "Safety factor")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* t_opt = tr->add_option("--opt", trace.opt, "Reference optimum (raw cost)");
  tr->add_flag("--oracle", trace.oracle, "Compute the optimum exactly")->excludes(t_opt);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run a self-check suite.\n"
                                         "failures.csv: suite,check,detail,instance");
  v->add_option("--suite", verify.suite, "Suite")
      ->required()
      ->check(CLI::IsMember(gcover::verify_suite_names()));
  v->add_option("--cap", verify.cap, "Size cap")->capture_default_str();
  v->add_option("--seeds", verify.cases, "Number of random cases")->capture_default_str();

  BenchArgs bench;
  auto* b = app.add_subcommand(
      "bench", "Hitting-time and ratio table per size.\n"
               "Columns: size,trials,feasible,hit_mean[,hit_sd,hit_p95],hit_bound,censored,"
               "ratio_mean[,ratio_max],bound_min,within_bound");
  b->add_option("--family", bench.family, "Instance family")
      ->required()
      ->check(CLI::IsMember({"setcover", "cds", "wcoverage"}));
  b->add_option("--sizes", bench.sizes, "Comma-separated sizes")->required()->delimiter(',');
  b->add_option("--trials", bench.trials, "Trials per size")->capture_default_str();
  b->add_option("--safety", bench.safety, "Safety factor")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  b->add_option("--jobs", bench.jobs, "Worker threads")->capture_default_str();

  GenArgs gen;
  auto* ge = app.add_subcommand("gen", "Generate a seeded instance file.");
  ge->add_option("--family", gen.family, "Family")
      ->required()
      ->check(CLI::IsMember({"graph", "setcover", "wcoverage"}));
  ge->add_option("--n", gen.n, "Vertices (graph)")->capture_default_str();
  ge->add_option("--p", gen.edge_prob, "Edge probability (graph)")->capture_default_str();
  ge->add_option("--elements", gen.elements, "Universe size (setcover)")->capture_default_str();
  ge->add_option("--items", gen.items, "Items (wcoverage)")->capture_default_str();
  ge->add_option("--sets", gen.sets, "Sets")->capture_default_str();
  ge->add_option("--density", gen.density, "Membership probability")->capture_default_str();
  ge->add_option("--cost-min", gen.cost_min, "Smallest set cost")->capture_default_str();
  ge->add_option("--cost-max", gen.cost_max, "Largest set cost")->capture_default_str();
  ge->add_option("--value-min", gen.value_min, "Smallest item value")->capture_default_str();
  ge->add_option("--value-max", gen.value_max, "Largest item value")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (s->parsed()) return cmd_solve(g, solve);
    if (tr->parsed()) return cmd_trace(g, trace);
    if (v->parsed()) return cmd_verify(g, verify);
    if (b->parsed()) return cmd_bench(g, bench);
    if (ge->parsed()) return cmd_gen(g, gen);
  } catch (const gcover::InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const gcover::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
