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

// GSEMO for minimum weight general cover: minimize (f1, f2) starting from the
// empty set, with uniform parent selection from the Pareto archive and
// standard bit-wise mutation, for a fixed number of iterations.

#ifndef GCOVER_GSEMO_HPP_
#define GCOVER_GSEMO_HPP_

#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcover/bitset.hpp"
#include "gcover/core.hpp"
#include "gcover/cover_problem.hpp"
#include "gcover/errors.hpp"
#include "gcover/rng.hpp"

namespace gcover {

enum class TraceLevel {
  kNone,    // no per-iteration records
  kEvents,  // records for iterations whose offspring entered the archive
  kFull,    // one record per iteration
};

inline std::string_view to_string(TraceLevel t) {
  switch (t) {
    case TraceLevel::kNone: return "none";
    case TraceLevel::kEvents: return "events";
    case TraceLevel::kFull: return "full";
  }
  return "unknown";
}

struct GsemoConfig {
  std::uint64_t iterations = 1;
  std::uint64_t seed = 0;
  TraceLevel trace_level = TraceLevel::kNone;
  bool memoize = true;
  // Assert incomparability and |P| <= beta + 1 after every iteration.
  bool check_invariants = false;
};

struct TraceRecord {
  std::uint64_t iteration = 0;  // 1-based
  std::size_t parent = 0;       // index into the archive (sorted by f1)
  std::size_t flipped = 0;      // number of bits the mutation flipped
  FitnessPoint offspring;
  bool inserted = false;
  std::size_t evicted = 0;
  std::size_t archive_size = 0;  // after the update
};

struct RunTrace {
  TraceLevel level = TraceLevel::kNone;
  std::vector<TraceRecord> records;
};

struct RunStats {
  std::uint64_t iterations = 0;
  std::uint64_t insertions = 0;
  // Iteration at which an f1 = 0 member first entered (0: the start).
  std::optional<std::uint64_t> first_feasible_iteration;
  double wall_seconds = 0.0;
  std::uint64_t oracle_calls = 0;
};

struct RunResult {
  std::optional<Individual> best;
  ParetoArchive<Individual> archive;
  RunStats stats;
  RunTrace trace;
  // Archive member with the smallest f1; reported when best is absent.
  Individual min_f1_member;
};

// Member with f1 = 0 and minimal f2. The archive holds at most one member per
// f1 value, so this is the first member when its f1 is 0.
template <BiObjective T>
std::optional<T> extract_best(const ParetoArchive<T>& archive) {
  if (archive.empty() || archive[0].f1() != 0.0) return std::nullopt;
  return archive[0];
}

// ceil(safety * e * beta * (beta + 1) * n), at least 1.
inline std::uint64_t default_iterations(std::int64_t beta, std::size_t n, double safety = 10.0) {
  if (!(safety > 0.0)) throw InvalidArgument("safety factor must be positive");
  if (beta <= 0 || n == 0) return 1;
  const double t = std::ceil(safety * std::exp(1.0) * static_cast<double>(beta) *
                             static_cast<double>(beta + 1) * static_cast<double>(n));
  return t < 1.0 ? 1 : static_cast<std::uint64_t>(t);
}

inline std::uint64_t default_iterations(const CoverProblem& problem, double safety = 10.0) {
  return default_iterations(problem.beta(), problem.n(), safety);
}

inline RunResult run(const CoverProblem& problem, const GsemoConfig& cfg) {
  if (cfg.iterations < 1) throw InvalidArgument("iteration budget must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  RngStream rng(cfg.seed);
  Evaluator eval(problem, cfg.memoize);
  RunResult result;
  result.trace.level = cfg.trace_level;
  const std::size_t cap = static_cast<std::size_t>(problem.beta()) + 1;

  result.archive.insert(eval.evaluate(BitSet(problem.n())));
  if (result.archive[0].f1() == 0.0) result.stats.first_feasible_iteration = 0;

  for (std::uint64_t t = 1; t <= cfg.iterations; ++t) {
    const std::size_t parent = rng.uniform_index(result.archive.size());
    const BitSet& parent_bits = result.archive[parent].bits();
    BitSet child = flip_mutation(parent_bits, rng);
    std::size_t flipped = 0;
    if (cfg.trace_level != TraceLevel::kNone) {
      BitSet diff = child;
      diff.subtract(parent_bits);
      BitSet back = parent_bits;
      back.subtract(child);
      flipped = diff.count() + back.count();
    }
    Individual offspring = eval.evaluate(std::move(child));
    const FitnessPoint fit = offspring.fitness();
    const InsertOutcome outcome = result.archive.insert(std::move(offspring));
    if (outcome.inserted) {
      ++result.stats.insertions;
      if (fit.f1() == 0.0 && !result.stats.first_feasible_iteration)
        result.stats.first_feasible_iteration = t;
    }
    if (cfg.trace_level == TraceLevel::kFull ||
        (cfg.trace_level == TraceLevel::kEvents && outcome.inserted)) {
      result.trace.records.push_back(
          {t, parent, flipped, fit, outcome.inserted, outcome.evicted, result.archive.size()});
    }
    if (cfg.check_invariants &&
        (result.archive.size() > cap || !result.archive.mutually_incomparable()))
      throw InvariantViolation("archive law broken at iteration " + std::to_string(t));
  }

  result.stats.iterations = cfg.iterations;
  result.stats.oracle_calls = eval.oracle_calls();
  result.best = extract_best(result.archive);
  result.min_f1_member = result.archive[0];
  result.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace gcover

#endif  // GCOVER_GSEMO_HPP_
