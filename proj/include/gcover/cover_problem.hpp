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

// Minimum weight general cover: minimize w(C) subject to g(C) = g(X) for a
// normalized, monotone nondecreasing utility g over a weighted ground set X.

#ifndef GCOVER_COVER_PROBLEM_HPP_
#define GCOVER_COVER_PROBLEM_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gcover/bitset.hpp"
#include "gcover/core.hpp"
#include "gcover/errors.hpp"
#include "gcover/rng.hpp"

namespace gcover {

// Relative slack used when flooring (g(X) - g(x)) / delta, so that values
// such as 0.3 / 0.1 = 2.9999999999999996 land on the intended level.
inline constexpr double kQuantizationGuard = 1e-9;
// Gains smaller than this (in absolute value) are treated as zero.
inline constexpr double kGainEpsilon = 1e-12;

// Utility oracle g. Implementations must be pure functions of the subset and
// safe to call concurrently.
class Utility {
 public:
  virtual ~Utility() = default;

  virtual double value(const BitSet& subset) const = 0;

  // g(subset + v) - g(subset) for v not in subset.
  virtual double gain(const BitSet& subset, std::size_t v) const {
    BitSet with = subset;
    with.set(v);
    return value(with) - value(subset);
  }

  // gain(subset, v) for every v; entries for members of subset are 0.
  // Adapters with incremental state override this to share work.
  virtual std::vector<double> gains(const BitSet& subset) const {
    std::vector<double> out(subset.size(), 0.0);
    const double base = value(subset);
    BitSet with = subset;
    for (std::size_t v = 0; v < subset.size(); ++v) {
      if (subset.test(v)) continue;
      with.set(v);
      out[v] = value(with) - base;
      with.reset(v);
    }
    return out;
  }

  // True when g only takes integer values; enables exact delta = 1 arithmetic.
  virtual bool integer_valued() const { return false; }
};

// Where the sparsity parameter delta came from.
enum class DeltaSource {
  kAnalytic,    // known in closed form (1 for integer utilities)
  kExhaustive,  // minimum positive marginal over all (C, v), enumerated
  kLowerBound,  // adapter lower bound on every positive marginal
  kEstimated,   // sampled minimum; not certified
};

inline std::string_view to_string(DeltaSource s) {
  switch (s) {
    case DeltaSource::kAnalytic: return "analytic";
    case DeltaSource::kExhaustive: return "exhaustive";
    case DeltaSource::kLowerBound: return "lower_bound";
    case DeltaSource::kEstimated: return "estimated";
  }
  return "unknown";
}

// Runs whose delta is a lower bound or an estimate are labeled heuristic.
inline bool is_certified(DeltaSource s) {
  return s == DeltaSource::kAnalytic || s == DeltaSource::kExhaustive;
}

// An immutable MinGC instance (X, w, g) with delta and the curvature-like
// parameter p declared by its adapter. Bound computations use weights
// divided by the cheapest weight; reported costs stay in raw units.
class CoverProblem {
 public:
  CoverProblem(std::string name, std::vector<double> weights,
               std::shared_ptr<const Utility> utility, double delta,
               double p_param, DeltaSource delta_source = DeltaSource::kAnalytic)
      : name_(std::move(name)),
        weights_(std::move(weights)),
        utility_(std::move(utility)),
        delta_(delta),
        p_param_(p_param),
        delta_source_(delta_source) {
    if (!utility_) throw InvalidArgument("cover problem needs a utility oracle");
    if (!(delta_ > 0.0) || !std::isfinite(delta_))
      throw InvalidArgument("delta must be positive and finite");
    if (!(p_param_ >= 0.0)) throw InvalidArgument("p must be nonnegative");
    w_min_ = std::numeric_limits<double>::infinity();
    w_max_ = 0.0;
    for (double w : weights_) {
      if (!(w > 0.0) || !std::isfinite(w))
        throw InvalidArgument("weights must be positive and finite");
      w_min_ = std::min(w_min_, w);
      w_max_ = std::max(w_max_, w);
    }
    if (weights_.empty()) w_min_ = w_max_ = 1.0;
    integer_valued_ = utility_->integer_valued();
    const double g_empty = utility_->value(BitSet(n()));
    if (std::abs(g_empty) > kGainEpsilon)
      throw InvalidArgument("utility must be normalized: g(empty) = " +
                            std::to_string(g_empty));
    g_total_ = utility_->value(BitSet::full(n()));
    if (g_total_ < 0.0) throw MonotonicityViolation("g(X) < g(empty)");
    beta_ = level_of(0.0);
  }

  const std::string& name() const { return name_; }
  std::size_t n() const { return weights_.size(); }
  const std::vector<double>& weights() const { return weights_; }
  double weight(std::size_t v) const { return weights_[v]; }
  const Utility& utility() const { return *utility_; }
  std::shared_ptr<const Utility> utility_ptr() const { return utility_; }

  double g(const BitSet& subset) const { return utility_->value(subset); }
  double g_total() const { return g_total_; }
  double delta() const { return delta_; }
  double p_param() const { return p_param_; }
  DeltaSource delta_source() const { return delta_source_; }
  bool integer_valued() const { return integer_valued_; }
  // Integer utility with delta = 1: nearly feasible coincides with feasible.
  bool integer_mode() const { return integer_valued_ && delta_ == 1.0; }

  std::int64_t beta() const { return beta_; }

  double w_min() const { return w_min_; }
  double w_max() const { return w_max_; }
  // Multiply raw weights by this to get weights with cheapest element = 1.
  double weight_scale() const { return 1.0 / w_min_; }
  double w_max_normalized() const { return w_max_ / w_min_; }

  // floor((g(X) - g) / delta), clamped to [0, beta].
  std::int64_t level_of(double g_value) const {
    std::int64_t level;
    if (integer_mode()) {
      level = std::llround(g_total_ - g_value);
    } else {
      const double r = (g_total_ - g_value) / delta_;
      level = static_cast<std::int64_t>(
          std::floor(r + kQuantizationGuard * std::max(1.0, std::abs(r))));
    }
    level = std::max<std::int64_t>(level, 0);
    if (beta_ >= 0 && level > beta_) level = beta_;
    return level;
  }

  double weight_of(const BitSet& subset) const {
    double total = 0.0;
    subset.for_each([&](std::size_t v) { total += weights_[v]; });
    return total;
  }

  FitnessPoint fitness_from(const BitSet& subset, double g_value) const {
    const std::int64_t level = level_of(g_value);
    return FitnessPoint(static_cast<double>(level) * delta_, weight_of(subset),
                        level);
  }

  Individual evaluate(BitSet subset) const {
    const double g_value = g(subset);
    FitnessPoint fit = fitness_from(subset, g_value);
    return Individual(std::move(subset), fit);
  }

  bool is_feasible_value(double g_value) const {
    return g_value >= g_total_ - kQuantizationGuard * std::max(1.0, std::abs(g_total_));
  }

 private:
  std::string name_;
  std::vector<double> weights_;
  std::shared_ptr<const Utility> utility_;
  double delta_;
  double p_param_;
  DeltaSource delta_source_;
  bool integer_valued_ = false;
  double g_total_ = 0.0;
  std::int64_t beta_ = -1;
  double w_min_ = 1.0;
  double w_max_ = 1.0;
};

// g(C + v) - g(C). Throws MonotonicityViolation on a negative gain.
inline double marginal_gain(const CoverProblem& problem, std::size_t v,
                            const BitSet& subset) {
  if (v >= problem.n()) throw InvalidArgument("element index out of range");
  if (subset.test(v)) throw InvalidArgument("element already in the subset");
  const double gain = problem.utility().gain(subset, v);
  if (gain < -kGainEpsilon)
    throw MonotonicityViolation("negative marginal gain " + std::to_string(gain) +
                                " for element " + std::to_string(v));
  return std::max(gain, 0.0);
}

// floor((g(X) - g(x)) / delta) * delta.
inline double f1(const CoverProblem& problem, const BitSet& x) {
  return static_cast<double>(problem.level_of(problem.g(x))) * problem.delta();
}

// Total raw weight of x.
inline double f2(const CoverProblem& problem, const BitSet& x) {
  return problem.weight_of(x);
}

inline std::int64_t beta(const CoverProblem& problem) { return problem.beta(); }

// f1(x) = 0, i.e. g(x) > g(X) - delta.
inline bool is_nearly_feasible(const CoverProblem& problem, const BitSet& x) {
  return problem.level_of(problem.g(x)) == 0;
}

// g(x) = g(X).
inline bool is_feasible(const CoverProblem& problem, const BitSet& x) {
  return problem.is_feasible_value(problem.g(x));
}

// Minimum strictly positive marginal over (C, v) pairs. When the budget
// covers all n * 2^(n-1) pairs the enumeration is exhaustive; otherwise
// pairs are sampled (C uniform, v uniform outside C).
inline double estimate_delta(const CoverProblem& problem, std::uint64_t sample_budget,
                             RngStream& rng) {
  if (sample_budget < 1) throw InvalidArgument("sample budget must be >= 1");
  const std::size_t n = problem.n();
  double best = std::numeric_limits<double>::infinity();
  auto consider = [&](double gain) {
    if (gain > kGainEpsilon) best = std::min(best, gain);
  };
  const bool exhaustive =
      n < 30 && (static_cast<std::uint64_t>(n) << (n > 0 ? n - 1 : 0)) <= sample_budget;
  if (exhaustive) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      BitSet c(n);
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1U) c.set(i);
      const auto gains = problem.utility().gains(c);
      for (std::size_t v = 0; v < n; ++v)
        if (!c.test(v)) consider(gains[v]);
    }
  } else {
    for (std::uint64_t s = 0; s < sample_budget; ++s) {
      BitSet c(n);
      for (std::size_t i = 0; i < n; ++i)
        if (rng.bernoulli(0.5)) c.set(i);
      const std::size_t outside = n - c.count();
      if (outside == 0) continue;
      std::size_t pick = rng.uniform_index(outside);
      for (std::size_t v = 0; v < n; ++v) {
        if (c.test(v)) continue;
        if (pick-- == 0) {
          consider(problem.utility().gain(c, v));
          break;
        }
      }
    }
  }
  if (!std::isfinite(best)) throw NoPositiveGain("no sampled marginal gain was positive");
  return best;
}

// Per-run memoizing front end to a problem's utility oracle.
class Evaluator {
 public:
  explicit Evaluator(const CoverProblem& problem, bool memoize = true,
                     std::size_t max_entries = std::size_t{1} << 20)
      : problem_(&problem), memoize_(memoize), max_entries_(max_entries) {}

  double utility(const BitSet& subset) {
    if (!memoize_) {
      ++oracle_calls_;
      return problem_->g(subset);
    }
    if (auto it = cache_.find(subset); it != cache_.end()) {
      ++cache_hits_;
      return it->second;
    }
    ++oracle_calls_;
    const double value = problem_->g(subset);
    if (cache_.size() >= max_entries_) cache_.clear();
    cache_.emplace(subset, value);
    return value;
  }

  Individual evaluate(BitSet subset) {
    const double g_value = utility(subset);
    FitnessPoint fit = problem_->fitness_from(subset, g_value);
    return Individual(std::move(subset), fit);
  }

  std::uint64_t oracle_calls() const { return oracle_calls_; }
  std::uint64_t cache_hits() const { return cache_hits_; }
  const CoverProblem& problem() const { return *problem_; }

 private:
  const CoverProblem* problem_;
  bool memoize_;
  std::size_t max_entries_;
  std::unordered_map<BitSet, double, BitSetHash> cache_;
  std::uint64_t oracle_calls_ = 0;
  std::uint64_t cache_hits_ = 0;
};

}  // namespace gcover

#endif  // GCOVER_COVER_PROBLEM_HPP_
