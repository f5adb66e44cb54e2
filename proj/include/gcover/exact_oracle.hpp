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

// Exact minimum-cost covers for small instances by depth-first branch and
// bound. Used to obtain reference optima; never called by the solvers.

#ifndef GCOVER_EXACT_ORACLE_HPP_
#define GCOVER_EXACT_ORACLE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcover/bitset.hpp"
#include "gcover/cover_problem.hpp"
#include "gcover/errors.hpp"

namespace gcover {

enum class CoverMode {
  kFeasible,        // g(C) = g(X)
  kNearlyFeasible,  // f1(C) = 0
};

inline std::string_view to_string(CoverMode m) {
  return m == CoverMode::kFeasible ? "feasible" : "nearly_feasible";
}

struct OracleResult {
  double opt_cost = 0.0;  // raw units
  BitSet witness;         // lexicographically smallest optimal subset
  std::uint64_t nodes_explored = 0;
  CoverMode mode = CoverMode::kFeasible;
};

inline constexpr std::size_t kDefaultOracleCap = 24;

// Costs within this relative distance count as equal when choosing the
// canonical witness.
inline constexpr double kCostTieTolerance = 1e-9;

namespace detail {

class BranchAndBound {
 public:
  BranchAndBound(const CoverProblem& problem, CoverMode mode)
      : problem_(problem), mode_(mode), eval_(problem), n_(problem.n()) {
    // Descending singleton cost-effectiveness, ties by index.
    const std::vector<double> single = problem.utility().gains(BitSet(n_));
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return single[a] * problem.weight(b) > single[b] * problem.weight(a);
    });
    // rest_[i]: the elements order_[i..n).
    rest_.assign(n_ + 1, BitSet(n_));
    suffix_min_weight_.assign(n_ + 1, std::numeric_limits<double>::infinity());
    for (std::size_t i = n_; i-- > 0;) {
      rest_[i] = rest_[i + 1];
      rest_[i].set(order_[i]);
      suffix_min_weight_[i] = std::min(suffix_min_weight_[i + 1], problem.weight(order_[i]));
    }
  }

  OracleResult solve() {
    BitSet current(n_);
    search(0, current, 0.0);
    if (!best_) throw Infeasible("no subset meets the " + std::string(to_string(mode_)) +
                                 " constraint");
    return {best_cost_, *best_, nodes_, mode_};
  }

 private:
  bool meets(double g_value) const {
    return mode_ == CoverMode::kFeasible ? problem_.is_feasible_value(g_value)
                                         : problem_.level_of(g_value) == 0;
  }

  bool worse_than_best(double cost) const {
    return best_ && cost > best_cost_ + kCostTieTolerance * std::max(1.0, best_cost_);
  }

  void offer(const BitSet& subset, double cost) {
    const double tol = kCostTieTolerance * std::max(1.0, best_cost_);
    if (!best_ || cost < best_cost_ - tol) {
      best_ = subset;
      best_cost_ = cost;
    } else if (cost <= best_cost_ + tol && lex_less(subset, *best_)) {
      best_ = subset;
      best_cost_ = std::min(best_cost_, cost);
    }
  }

  void search(std::size_t depth, BitSet& current, double cost) {
    ++nodes_;
    if (worse_than_best(cost)) return;
    if (meets(eval_.utility(current))) {
      // Weights are positive, so no superset is cheaper.
      offer(current, cost);
      return;
    }
    if (depth == n_) return;
    if (worse_than_best(cost + suffix_min_weight_[depth])) return;
    BitSet reachable = current;
    reachable |= rest_[depth];
    if (!meets(eval_.utility(reachable))) return;
    const std::size_t v = order_[depth];
    current.set(v);
    search(depth + 1, current, cost + problem_.weight(v));
    current.reset(v);
    search(depth + 1, current, cost);
  }

  const CoverProblem& problem_;
  CoverMode mode_;
  Evaluator eval_;
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<BitSet> rest_;
  std::vector<double> suffix_min_weight_;
  std::optional<BitSet> best_;
  double best_cost_ = 0.0;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

// Minimum raw cost of a subset meeting `mode`, with the lexicographically
// smallest optimal witness. Throws TooLarge when n > cap and Infeasible when
// no subset qualifies.
inline OracleResult exact_opt(const CoverProblem& problem,
                              CoverMode mode = CoverMode::kFeasible,
                              std::size_t cap = kDefaultOracleCap) {
  if (problem.n() > cap)
    throw TooLarge("instance has " + std::to_string(problem.n()) +
                   " elements; oracle cap is " + std::to_string(cap));
  return detail::BranchAndBound(problem, mode).solve();
}

}  // namespace gcover

#endif  // GCOVER_EXACT_ORACLE_HPP_
