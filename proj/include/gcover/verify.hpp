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

// Self-check suites run by `gcover verify`. Each suite either enumerates
// every small case up to a size cap or draws seeded random cases, and
// reports every violated assertion together with the offending instance.

#ifndef GCOVER_VERIFY_HPP_
#define GCOVER_VERIFY_HPP_

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gcover/bintrack.hpp"
#include "gcover/bitset.hpp"
#include "gcover/bounds.hpp"
#include "gcover/core.hpp"
#include "gcover/cover_problem.hpp"
#include "gcover/errors.hpp"
#include "gcover/exact_oracle.hpp"
#include "gcover/greedy.hpp"
#include "gcover/gsemo.hpp"
#include "gcover/problems/cds.hpp"
#include "gcover/problems/generators.hpp"
#include "gcover/problems/graph.hpp"
#include "gcover/problems/io.hpp"
#include "gcover/problems/set_cover.hpp"
#include "gcover/problems/weighted_coverage.hpp"
#include "gcover/rng.hpp"

namespace gcover {

struct VerifyOptions {
  std::size_t cap = 6;     // size cap (vertices, sets or levels, per suite)
  std::size_t cases = 50;  // random cases for sampled suites
  std::uint64_t seed = 1;
};

struct VerifyFailure {
  std::string check;
  std::string detail;
  std::string instance;  // serialized counterexample, if any
};

struct VerifyReport {
  std::string suite;
  std::uint64_t cases = 0;
  std::uint64_t checks = 0;
  std::uint64_t skipped = 0;
  std::vector<VerifyFailure> failures;

  bool passed() const { return failures.empty(); }
};

inline const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"archive",      "delta",       "submodularity",
                                                 "cds-ordering", "alpha-decay", "bintrack"};
  return names;
}

// Calls fn(graph) for every connected labeled graph on n vertices.
inline void for_each_connected_graph(std::size_t n, const std::function<void(const Graph&)>& fn) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  if (pairs.size() >= 63) throw TooLarge("too many vertices to enumerate graphs");
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g(n);
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if ((mask >> e) & 1U) g.add_edge(pairs[e].first, pairs[e].second);
    if (g.connected()) fn(g);
  }
}

namespace detail {

inline std::string serialize(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

inline std::string serialize(const SetSystemInstance& inst) {
  std::ostringstream out;
  write_set_system(out, inst);
  return out.str();
}

inline std::string serialize(const WeightedCoverageInstance& inst) {
  std::ostringstream out;
  write_weighted_coverage(out, inst);
  return out.str();
}

class Recorder {
 public:
  explicit Recorder(VerifyReport& r) : r_(r) {}
  // Records one assertion; returns `ok`.
  bool expect(bool ok, std::string_view check, const std::string& detail,
              const std::string& instance = {}) {
    ++r_.checks;
    if (!ok) r_.failures.push_back({std::string(check), detail, instance});
    return ok;
  }

 private:
  VerifyReport& r_;
};

// Random fitness streams: one per case, beta drawn from 1..cap, 10^4
// insertions each, checked after every insertion.
inline void verify_archive(const VerifyOptions& o, VerifyReport& rep) {
  Recorder rec(rep);
  const std::size_t max_beta = std::max<std::size_t>(o.cap, 1);
  for (std::size_t c = 0; c < o.cases; ++c) {
    RngStream rng(derive_seed(o.seed, c));
    const auto beta = static_cast<std::int64_t>(1 + rng.uniform_index(max_beta));
    ParetoArchive<FitnessPoint> archive;
    bool ok = true;
    for (int i = 0; i < 10000 && ok; ++i) {
      const auto level = static_cast<std::int64_t>(rng.uniform_index(beta + 1));
      const double f2 = static_cast<double>(rng.uniform_index(50));
      archive.insert(FitnessPoint(static_cast<double>(level), f2, level));
      const bool size_ok = archive.size() <= static_cast<std::size_t>(beta) + 1;
      const bool incomparable = archive.mutually_incomparable();
      ok = rec.expect(size_ok && incomparable, "archive-law",
                      "stream " + std::to_string(c) + " insertion " + std::to_string(i));
    }
    ++rep.cases;
  }
}

// Utilities are monotone and certified delta values match the brute-force
// minimum positive marginal.
inline void verify_delta(const VerifyOptions& o, VerifyReport& rep) {
  Recorder rec(rep);
  const std::size_t max_sets = std::clamp<std::size_t>(o.cap, 1, kExactDeltaMaxSets);
  for (std::size_t c = 0; c < o.cases; ++c) {
    RngStream pick(derive_seed(o.seed, c));
    const std::size_t sets = 1 + pick.uniform_index(max_sets);
    const std::size_t items = 1 + pick.uniform_index(max_sets + 2);
    const bool integral = pick.bernoulli(0.3);
    const ValueRange values = integral ? ValueRange{1.0, 1.0} : ValueRange{0.25, 1.0};
    auto inst = random_weighted_coverage(items, sets, 0.4, values, {1.0, 3.0},
                                         derive_seed(o.seed ^ 0xD1u, c));
    const CoverProblem problem = weighted_coverage_problem(inst);
    double brute = std::numeric_limits<double>::infinity();
    bool monotone = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << sets); ++mask) {
      const BitSet base = BitSet::from_mask(sets, mask);
      const double g0 = problem.g(base);
      for (std::size_t v = 0; v < sets; ++v) {
        if (base.test(v)) continue;
        BitSet with = base;
        with.set(v);
        const double d = problem.g(with) - g0;
        if (d < -kGainEpsilon) monotone = false;
        if (d > kGainEpsilon) brute = std::min(brute, d);
      }
    }
    const std::string text = serialize(inst);
    rec.expect(monotone, "monotone", "negative marginal", text);
    if (std::isfinite(brute)) {
      rec.expect(problem.delta_source() == DeltaSource::kExhaustive, "delta-source",
                 std::string(to_string(problem.delta_source())), text);
      rec.expect(std::abs(problem.delta() - brute) <= 1e-12 * std::max(1.0, brute),
                 "delta-exact",
                 "delta " + format_double(problem.delta()) + " vs " + format_double(brute), text);
      RngStream rng(0);
      const double est = estimate_delta(problem, std::uint64_t{1} << 20, rng);
      rec.expect(std::abs(est - brute) <= 1e-12 * std::max(1.0, brute), "estimate-exhaustive",
                 format_double(est) + " vs " + format_double(brute), text);
    }
    ++rep.cases;
  }
}

// Per connected graph: value tables of g and q over all vertex subsets.
struct CdsTables {
  std::vector<double> g;
  std::vector<std::size_t> q;
};

inline CdsTables cds_tables(const Graph& graph) {
  const std::size_t n = graph.n();
  CdsUtility u(graph);
  CdsTables t;
  t.g.resize(std::size_t{1} << n);
  t.q.resize(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < t.g.size(); ++mask) {
    const BitSet c = BitSet::from_mask(n, mask);
    t.g[mask] = u.value(c);
    t.q[mask] = count_incident_components(graph, c);
  }
  return t;
}

inline std::size_t cds_cap(std::size_t cap) { return std::clamp<std::size_t>(cap, 3, 7); }

// g monotone and normalized, g(V) = n - 2 exactly on connected dominating
// sets, and -q submodular (pairwise diminishing returns).
inline void verify_submodularity(const VerifyOptions& o, VerifyReport& rep) {
  Recorder rec(rep);
  for (std::size_t n = 3; n <= cds_cap(o.cap); ++n) {
    for_each_connected_graph(n, [&](const Graph& graph) {
      ++rep.cases;
      const CdsTables t = cds_tables(graph);
      const std::uint64_t full = (std::uint64_t{1} << n) - 1;
      bool ok = rec.expect(t.g[0] == 0.0 && t.g[full] == static_cast<double>(n) - 2.0,
                           "cds-normalization", "g(empty) or g(V)", serialize(graph));
      for (std::uint64_t s = 0; s <= full && ok; ++s) {
        const bool cds = is_connected_dominating_set(graph, BitSet::from_mask(n, s));
        ok &= rec.expect(cds == (t.g[s] == t.g[full]), "cds-characterization",
                         "subset mask " + std::to_string(s), serialize(graph));
        for (std::size_t u = 0; u < n && ok; ++u) {
          const std::uint64_t su = s | (std::uint64_t{1} << u);
          if (su == s) continue;
          ok &= rec.expect(t.g[su] >= t.g[s], "cds-monotone",
                           "mask " + std::to_string(s) + " + " + std::to_string(u),
                           serialize(graph));
          for (std::size_t v = u + 1; v < n && ok; ++v) {
            const std::uint64_t sv = s | (std::uint64_t{1} << v);
            if (sv == s) continue;
            const std::uint64_t suv = su | sv;
            // -q(S+u) - q(S+v) >= -q(S+u+v) - q(S)
            ok &= rec.expect(t.q[su] + t.q[sv] <= t.q[suv] + t.q[s], "neg-q-submodular",
                             "mask " + std::to_string(s) + " pair " + std::to_string(u) + "," +
                                 std::to_string(v),
                             serialize(graph));
          }
        }
      }
    });
  }
}

// For every minimum CDS C* in its connected ordering and every C, the gain
// of each v_i in C* \ C after the earlier ones exceeds its gain on C by at
// most 1.
inline void verify_cds_ordering(const VerifyOptions& o, VerifyReport& rep) {
  Recorder rec(rep);
  for (std::size_t n = 3; n <= cds_cap(o.cap); ++n) {
    for_each_connected_graph(n, [&](const Graph& graph) {
      ++rep.cases;
      const CdsTables t = cds_tables(graph);
      const std::uint64_t full = (std::uint64_t{1} << n) - 1;
      std::size_t best = n + 1;
      std::vector<std::uint64_t> optima;
      for (std::uint64_t s = 0; s <= full; ++s) {
        if (t.g[s] != t.g[full]) continue;
        const auto size = static_cast<std::size_t>(std::popcount(s));
        if (size < best) {
          best = size;
          optima.clear();
        }
        if (size == best) optima.push_back(s);
      }
      for (std::uint64_t star : optima) {
        const auto order = connected_ordering(graph, BitSet::from_mask(n, star));
        bool ok = true;
        for (std::uint64_t c = 0; c <= full && ok; ++c) {
          std::uint64_t s = c;
          for (std::size_t v : order) {
            const std::uint64_t bit = std::uint64_t{1} << v;
            if (c & bit) continue;
            const double late = t.g[s | bit] - t.g[s];
            const double early = t.g[c | bit] - t.g[c];
            ok &= rec.expect(late <= early + 1.0, "ordering-gap",
                             "C* mask " + std::to_string(star) + " C mask " + std::to_string(c) +
                                 " vertex " + std::to_string(v + 1),
                             serialize(graph));
            s |= bit;
          }
        }
      }
    });
  }
}

inline SetSystemInstance sampled_set_cover(const VerifyOptions& o, std::size_t c, bool unit) {
  RngStream pick(derive_seed(o.seed ^ 0xA1u, c));
  const std::size_t sets = 2 + pick.uniform_index(std::max<std::size_t>(o.cap, 3) - 1);
  const std::size_t elements = 2 + pick.uniform_index(2 * std::max<std::size_t>(o.cap, 3) - 1);
  const ValueRange costs = unit ? ValueRange{1.0, 1.0} : ValueRange{1.0, 4.0};
  return random_set_cover(elements, sets, 0.3, costs, derive_seed(o.seed, c));
}

// Greedy ratio bound and alpha decay against the exact optimum, on set
// cover (unit and weighted) and on connected dominating set.
inline void verify_alpha_decay_suite(const VerifyOptions& o, VerifyReport& rep) {
  Recorder rec(rep);
  auto check = [&](const CoverProblem& problem, const std::string& text) {
    ++rep.cases;
    const GreedyResult greedy = greedy_solve(problem);
    const double opt = exact_opt(problem).opt_cost;
    rec.expect(verify_alpha_decay(greedy.trace, opt), "alpha-decay",
               problem.name() + " opt " + format_double(opt), text);
    const double bound = greedy_ratio_bound(problem, opt);
    rec.expect(within_ratio(greedy.cost, opt, bound), "greedy-ratio",
               problem.name() + " cost " + format_double(greedy.cost) + " opt " +
                   format_double(opt),
               text);
    for (const auto& pick : greedy.trace.picks)
      rec.expect(pick.gain >= problem.delta() * (1.0 - 1e-12), "gain-at-least-delta",
                 problem.name(), text);
  };
  for (std::size_t c = 0; c < o.cases; ++c) {
    const auto inst = sampled_set_cover(o, c, c % 2 == 0);
    check(set_cover_problem(inst), serialize(inst));
    const std::size_t n = 3 + c % (std::max<std::size_t>(o.cap, 3) - 2);
    const Graph g = random_connected_graph(n, 0.35, derive_seed(o.seed ^ 0xC5u, c));
    check(cds_problem(g), serialize(g));
  }
}

// Full-trace GSEMO runs analyzed by the bin system.
inline void verify_bintrack(const VerifyOptions& o, VerifyReport& rep) {
  Recorder rec(rep);
  auto check = [&](const CoverProblem& problem, const std::string& text, std::uint64_t seed) {
    const double opt = exact_opt(problem, CoverMode::kNearlyFeasible).opt_cost;
    if (problem.beta() > 0 && !(opt * problem.weight_scale() > problem.delta())) {
      ++rep.skipped;
      return;
    }
    ++rep.cases;
    GsemoConfig cfg;
    cfg.iterations = default_iterations(problem);
    cfg.seed = seed;
    cfg.trace_level = TraceLevel::kFull;
    const RunResult run_result = run(problem, cfg);
    const BinAnalysis a = analyze_run(problem, run_result.trace, opt, false);
    const BinDiagnostics& d = a.diagnostics;
    const std::string what = problem.name() + " seed " + std::to_string(seed);
    rec.expect(d.tracker_increases == 0, "tracker-monotone", what, text);
    rec.expect(d.pi1_failures == 0, "pi1", what, text);
    rec.expect(d.pi2_failures == 0, "pi2", what, text);
    rec.expect(d.bridge_failures == 0, "bridge", what, text);
    rec.expect(d.membership_failures == 0, "bin-membership", what, text);
    rec.expect(d.zero_bin_failures == 0, "zero-bin-cost", what, text);
    rec.expect(d.replay_mismatches == 0, "replay", what, text);
  };
  for (std::size_t c = 0; c < o.cases; ++c) {
    const auto inst = sampled_set_cover(o, c, c % 2 == 0);
    check(set_cover_problem(inst), serialize(inst), derive_seed(o.seed ^ 0xB7u, c));
    const std::size_t n = 3 + c % (std::max<std::size_t>(o.cap, 3) - 2);
    const Graph g = random_connected_graph(n, 0.35, derive_seed(o.seed ^ 0xC5u, c));
    check(cds_problem(g), serialize(g), derive_seed(o.seed ^ 0xB8u, c));
  }
}

}  // namespace detail

// Throws InvalidArgument for an unknown suite name.
inline VerifyReport run_verify_suite(std::string_view suite, const VerifyOptions& o) {
  VerifyReport rep;
  rep.suite = std::string(suite);
  if (suite == "archive") {
    detail::verify_archive(o, rep);
  } else if (suite == "delta") {
    detail::verify_delta(o, rep);
  } else if (suite == "submodularity") {
    detail::verify_submodularity(o, rep);
  } else if (suite == "cds-ordering") {
    detail::verify_cds_ordering(o, rep);
  } else if (suite == "alpha-decay") {
    detail::verify_alpha_decay_suite(o, rep);
  } else if (suite == "bintrack") {
    detail::verify_bintrack(o, rep);
  } else {
    throw InvalidArgument("unknown verify suite '" + std::string(suite) + "'");
  }
  return rep;
}

}  // namespace gcover

#endif  // GCOVER_VERIFY_HPP_
