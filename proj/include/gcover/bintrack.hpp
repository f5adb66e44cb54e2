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

// Bin tracking for GSEMO runs.
//
// A side structure holds at most one fitness point per f1 level 0..beta.
// A new offspring enters only if it "advances" a binned point, and every
// binned point must satisfy a quality condition: an exponential-decay bound
// on f1 while the smallest occupied level (the tracker) is at or above the
// phase boundary floor((p + 2 delta + 1) opt / delta), and a linear-plus-log
// bound on f2 below it. Observing a run checks that the tracker never rises,
// that every binned point meets its condition, and records when the tracker
// reaches 0.
//
// All comparisons use normalized weights (cheapest element = 1). Fitness
// points themselves carry raw f2 values.

#ifndef GCOVER_BINTRACK_HPP_
#define GCOVER_BINTRACK_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcover/bounds.hpp"
#include "gcover/core.hpp"
#include "gcover/cover_problem.hpp"
#include "gcover/errors.hpp"
#include "gcover/gsemo.hpp"

namespace gcover {

inline constexpr double kAnalysisTolerance = 1e-9;

// a <= b up to relative tolerance.
inline bool approx_leq(double a, double b) {
  return a <= b + kAnalysisTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

// floor((p + 2 delta + 1) * opt / delta), opt normalized.
inline std::int64_t phase_boundary(double opt, double p, double delta) {
  const double r = (p + 2.0 * delta + 1.0) * opt / delta;
  return static_cast<std::int64_t>(
      std::floor(r + kQuantizationGuard * std::max(1.0, std::abs(r))));
}

struct AnalysisParams {
  double opt = 1.0;    // normalized
  double p = 0.0;
  double delta = 1.0;
  double w_max = 1.0;  // normalized
  double f1_empty = 0.0;
  std::int64_t beta = 0;
  double weight_scale = 1.0;

  static AnalysisParams of(const CoverProblem& problem, double opt_raw) {
    return {opt_raw * problem.weight_scale(), problem.p_param(), problem.delta(),
            problem.w_max_normalized(), static_cast<double>(problem.beta()) * problem.delta(),
            problem.beta(), problem.weight_scale()};
  }

  // (p + 2 delta) * opt
  double offset() const { return (p + 2.0 * delta) * opt; }
  // f1(empty) - (p + 2 delta) * opt
  double alpha0() const { return f1_empty - offset(); }
  std::int64_t boundary() const { return phase_boundary(opt, p, delta); }
  BoundInputs bound_inputs() const { return {p, delta, w_max, 0.0, f1_empty}; }
  double f2(const FitnessPoint& x) const { return x.f2() * weight_scale; }
};

// f1(x) <= alpha0' * exp(-f2(x) / opt) + (p + 2 delta) * opt.
inline bool pi1_check(const FitnessPoint& x, const AnalysisParams& a) {
  return approx_leq(x.f1(), a.alpha0() * std::exp(-a.f2(x) / a.opt) + a.offset());
}

// f2(x) <= w_max * (boundary - f1(x) / delta) + ln(alpha0' / (opt - delta)) * opt.
// Throws DegenerateOpt when opt <= delta.
inline bool pi2_check(const FitnessPoint& x, const AnalysisParams& a) {
  const double log_term = phase_two_log_term(a.bound_inputs(), a.opt);
  const double rhs = a.w_max * (static_cast<double>(a.boundary()) - x.f1() / a.delta) +
                     log_term * a.opt;
  return approx_leq(a.f2(x), rhs);
}

// xp advances x before the tracker crosses the boundary: xp weakly dominates
// x, or xp lowers f1 by at least delta, raises f2 by at most w_max, and
// shrinks f1 - (p + 2 delta) opt by the factor 1 - (f2(xp) - f2(x)) / opt.
inline bool advances_phase1(const FitnessPoint& xp, const FitnessPoint& x,
                            const AnalysisParams& a) {
  if (weakly_dominates(xp, x)) return true;
  const double c = a.offset();
  const double rise = a.f2(xp) - a.f2(x);
  return approx_leq(xp.f1() - c, (1.0 - rise / a.opt) * (x.f1() - c)) &&
         approx_leq(xp.f1(), x.f1() - a.delta) && approx_leq(rise, a.w_max);
}

// xp advances x after the crossing: weak dominance, or an f1 drop of at least
// delta with an f2 rise of at most w_max.
inline bool advances_phase2(const FitnessPoint& xp, const FitnessPoint& x,
                            const AnalysisParams& a) {
  if (weakly_dominates(xp, x)) return true;
  return approx_leq(xp.f1(), x.f1() - a.delta) && approx_leq(a.f2(xp) - a.f2(x), a.w_max);
}

enum class Phase { kOne = 1, kTwo = 2 };

enum class TrackEventKind {
  kInserted,
  kEvicted,
  kTrackerMoved,
  kPhaseEnteredTwo,
  kRejectedNoAdvance,
};

inline std::string_view to_string(TrackEventKind k) {
  switch (k) {
    case TrackEventKind::kInserted: return "inserted";
    case TrackEventKind::kEvicted: return "evicted";
    case TrackEventKind::kTrackerMoved: return "tracker_moved";
    case TrackEventKind::kPhaseEnteredTwo: return "phase_entered_two";
    case TrackEventKind::kRejectedNoAdvance: return "rejected_no_advance";
  }
  return "unknown";
}

struct TrackEvent {
  std::uint64_t iteration = 0;
  TrackEventKind kind = TrackEventKind::kInserted;
  std::int64_t bin = 0;
  FitnessPoint point;
  std::int64_t tracker = 0;  // after the event
  Phase phase = Phase::kOne;  // after the event
};

// Counts of failed runtime checks; all zero on a sound run.
struct BinDiagnostics {
  std::uint64_t observations = 0;
  std::uint64_t admissions = 0;
  std::uint64_t pi1_failures = 0;
  std::uint64_t pi2_failures = 0;
  std::uint64_t bridge_failures = 0;  // pi2 failed on the point that crossed
  std::uint64_t tracker_increases = 0;
  std::uint64_t membership_failures = 0;  // binned point missing from the archive
  std::uint64_t zero_bin_failures = 0;    // bin 0 occupant over the cost bound
  // Rejected offspring the archive admitted or refused differently on replay.
  std::uint64_t replay_mismatches = 0;

  bool ok() const {
    return pi1_failures == 0 && pi2_failures == 0 && bridge_failures == 0 &&
           tracker_increases == 0 && membership_failures == 0 && zero_bin_failures == 0 &&
           replay_mismatches == 0;
  }
};

class BinSystem {
 public:
  // Seeds bin beta with the empty set's fitness `zero`. With beta = 0 the
  // tracker starts at 0 and observations are no-ops. Throws DegenerateOpt
  // when beta > 0 and opt <= delta.
  BinSystem(const AnalysisParams& params, const FitnessPoint& zero, bool record_events = true)
      : params_(params), bins_(static_cast<std::size_t>(params.beta) + 1),
        record_events_(record_events) {
    tracker_ = params_.beta;
    bins_.back() = zero;
    if (params_.beta == 0) {
      phase_ = Phase::kTwo;
      hitting_iteration_ = 0;
      return;
    }
    if (!(params_.opt > params_.delta))
      throw DegenerateOpt("opt = " + std::to_string(params_.opt) +
                          " <= delta = " + std::to_string(params_.delta));
    boundary_ = params_.boundary();
    // No first phase when the start is already below the boundary.
    phase_ = params_.beta < boundary_ ? Phase::kTwo : Phase::kOne;
    check_quality(zero, zero.level() < boundary_ && phase_ == Phase::kTwo, false);
  }

  const AnalysisParams& params() const { return params_; }
  std::int64_t tracker() const { return tracker_; }
  Phase phase() const { return phase_; }
  std::int64_t boundary() const { return boundary_; }
  const std::vector<std::optional<FitnessPoint>>& bins() const { return bins_; }
  const BinDiagnostics& diagnostics() const { return diag_; }
  const std::vector<TrackEvent>& events() const { return events_; }
  std::optional<std::uint64_t> hitting_iteration() const { return hitting_iteration_; }
  std::optional<std::uint64_t> phase_two_iteration() const { return phase_two_iteration_; }

  // Processes one offspring after the archive update. `archive` is the
  // population after the update and `inserted` whether the offspring
  // entered it. Returns the number of events produced.
  template <BiObjective T>
  std::size_t observe(std::uint64_t iteration, const FitnessPoint& candidate,
                      const ParetoArchive<T>& archive, bool inserted) {
    if (params_.beta == 0) return 0;
    ++diag_.observations;
    const std::size_t before = events_.size();
    bool advances = false;
    for (std::int64_t b = 0; b <= params_.beta && !advances; ++b) {
      const auto& slot = bins_[static_cast<std::size_t>(b)];
      if (!slot || !active(b)) continue;
      advances = phase_ == Phase::kOne ? advances_phase1(candidate, *slot, params_)
                                       : advances_phase2(candidate, *slot, params_);
    }

    if (!advances) {
      // Keep the bins inside the population: drop whatever the archive
      // evicted for this offspring.
      if (inserted) evict_dominated_by(iteration, candidate);
      emit(iteration, TrackEventKind::kRejectedNoAdvance, candidate.level(), candidate);
      check_membership(archive);
      return events_.size() - before;
    }

    FitnessPoint entrant = candidate;
    if (!inserted) {
      // The archive refused the offspring, so some member strictly
      // dominates it; the one with the smallest f1 enters instead.
      const T* y = archive.strongest_dominator(candidate);
      if (y == nullptr) {
        ++diag_.replay_mismatches;
        return events_.size() - before;
      }
      entrant = FitnessPoint(y->f1(), y->f2(), y->level());
    }
    ++diag_.admissions;
    const Phase admitted_in = phase_;
    evict_dominated_by(iteration, entrant);
    bins_[static_cast<std::size_t>(entrant.level())] = entrant;
    emit(iteration, TrackEventKind::kInserted, entrant.level(), entrant);

    const std::int64_t old_tracker = tracker_;
    tracker_ = smallest_occupied();
    if (tracker_ > old_tracker) ++diag_.tracker_increases;
    if (tracker_ < old_tracker)
      emit(iteration, TrackEventKind::kTrackerMoved, tracker_, entrant);
    bool crossed = false;
    if (phase_ == Phase::kOne && tracker_ < boundary_) {
      phase_ = Phase::kTwo;
      phase_two_iteration_ = iteration;
      crossed = true;
      emit(iteration, TrackEventKind::kPhaseEnteredTwo, tracker_, entrant);
    }
    if (admitted_in == Phase::kOne && !pi1_check(entrant, params_)) ++diag_.pi1_failures;
    if (phase_ == Phase::kTwo && entrant.level() < boundary_)
      check_quality(entrant, true, crossed);
    if (tracker_ == 0 && !hitting_iteration_) {
      hitting_iteration_ = iteration;
      const double bound = gsemo_general_ratio_bound(params_.bound_inputs(), params_.opt);
      if (!within_ratio(params_.f2(*bins_[0]), params_.opt, bound)) ++diag_.zero_bin_failures;
    }
    check_membership(archive);
    return events_.size() - before;
  }

 private:
  bool active(std::int64_t bin) const { return phase_ == Phase::kOne || bin < boundary_; }

  std::int64_t smallest_occupied() const {
    for (std::size_t b = 0; b < bins_.size(); ++b)
      if (bins_[b]) return static_cast<std::int64_t>(b);
    return params_.beta;
  }

  void check_quality(const FitnessPoint& x, bool phase_two, bool crossing) {
    if (!phase_two) {
      if (!pi1_check(x, params_)) ++diag_.pi1_failures;
      return;
    }
    if (!pi2_check(x, params_)) {
      ++diag_.pi2_failures;
      if (crossing) ++diag_.bridge_failures;
    }
  }

  void evict_dominated_by(std::uint64_t iteration, const FitnessPoint& x) {
    for (std::size_t b = 0; b < bins_.size(); ++b) {
      auto& slot = bins_[b];
      if (!slot || !weakly_dominates(x, *slot)) continue;
      if (!(*slot == x)) emit(iteration, TrackEventKind::kEvicted, static_cast<std::int64_t>(b), *slot);
      slot.reset();
    }
  }

  template <BiObjective T>
  void check_membership(const ParetoArchive<T>& archive) {
    for (const auto& slot : bins_) {
      if (!slot) continue;
      const T* m = archive.find_f1(slot->f1());
      if (m == nullptr || m->f2() != slot->f2()) ++diag_.membership_failures;
    }
  }

  void emit(std::uint64_t iteration, TrackEventKind kind, std::int64_t bin,
            const FitnessPoint& point) {
    if (record_events_) events_.push_back({iteration, kind, bin, point, tracker_, phase_});
  }

  AnalysisParams params_;
  std::vector<std::optional<FitnessPoint>> bins_;
  std::int64_t tracker_ = 0;
  std::int64_t boundary_ = 0;
  Phase phase_ = Phase::kOne;
  bool record_events_;
  std::vector<TrackEvent> events_;
  BinDiagnostics diag_;
  std::optional<std::uint64_t> hitting_iteration_;
  std::optional<std::uint64_t> phase_two_iteration_;
};

struct BinAnalysis {
  BinDiagnostics diagnostics;
  std::vector<TrackEvent> events;
  std::optional<std::uint64_t> hitting_iteration;
  std::optional<std::uint64_t> phase_two_iteration;
  std::int64_t final_tracker = 0;
  std::int64_t boundary = 0;
  AnalysisParams params;
};

// Replays a full-trace run through a fitness-only archive and a bin system.
// Throws InvalidArgument unless the trace has one record per iteration and
// DegenerateOpt when beta > 0 and opt <= delta.
inline BinAnalysis analyze_run(const CoverProblem& problem, const RunTrace& trace,
                               double opt_raw, bool record_events = true) {
  if (trace.level != TraceLevel::kFull)
    throw InvalidArgument("bin tracking needs a full run trace");
  const AnalysisParams params = AnalysisParams::of(problem, opt_raw);
  const FitnessPoint zero = problem.fitness_from(BitSet(problem.n()), 0.0);
  BinSystem sys(params, zero, record_events);
  ParetoArchive<FitnessPoint> archive;
  archive.insert(zero);
  BinDiagnostics replay;
  for (const TraceRecord& r : trace.records) {
    const bool inserted = archive.insert(r.offspring).inserted;
    if (inserted != r.inserted) ++replay.replay_mismatches;
    sys.observe(r.iteration, r.offspring, archive, inserted);
  }
  BinAnalysis out;
  out.diagnostics = sys.diagnostics();
  out.diagnostics.replay_mismatches += replay.replay_mismatches;
  out.events = sys.events();
  out.hitting_iteration = sys.hitting_iteration();
  out.phase_two_iteration = sys.phase_two_iteration();
  out.final_tracker = sys.tracker();
  out.boundary = sys.boundary();
  out.params = params;
  return out;
}

// Empirical tracker hitting times of one instance against e * beta (beta + 1) n.
struct HittingSummary {
  std::size_t runs = 0;
  std::size_t censored = 0;  // never hit; counted at the budget
  double mean = 0.0;
  double sd = 0.0;
  double p95 = 0.0;
  double bound = 0.0;
  // One-sided 95% test: mean - 1.645 * sd / sqrt(runs) <= bound.
  bool consistent = true;
};

inline HittingSummary summarize_hitting(const std::vector<std::optional<std::uint64_t>>& times,
                                        std::uint64_t budget, std::int64_t beta, std::size_t n) {
  if (times.empty()) throw InvalidArgument("no hitting times to summarize");
  HittingSummary s;
  s.runs = times.size();
  s.bound = expected_hitting_bound(beta, n);
  std::vector<double> xs;
  xs.reserve(times.size());
  for (const auto& t : times) {
    if (!t) ++s.censored;
    xs.push_back(static_cast<double>(t ? *t : budget));
  }
  double sum = 0.0;
  for (double x : xs) sum += x;
  s.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  std::sort(xs.begin(), xs.end());
  const auto rank = static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(xs.size())));
  s.p95 = xs[std::max<std::size_t>(rank, 1) - 1];
  s.consistent =
      s.mean - 1.645 * s.sd / std::sqrt(static_cast<double>(xs.size())) <= s.bound;
  return s;
}

}  // namespace gcover

#endif  // GCOVER_BINTRACK_HPP_
