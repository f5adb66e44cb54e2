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

// Cost-effectiveness greedy: repeatedly add the element with the largest
// marginal gain per unit weight until g(C) = g(X).

#ifndef GCOVER_GREEDY_HPP_
#define GCOVER_GREEDY_HPP_

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "gcover/bitset.hpp"
#include "gcover/cover_problem.hpp"
#include "gcover/errors.hpp"

namespace gcover {

struct GreedyPick {
  std::size_t element = 0;
  double gain = 0.0;
  double weight = 0.0;  // raw units
  double cost_effectiveness = 0.0;  // gain / weight
};

struct GreedyTrace {
  std::vector<GreedyPick> picks;
  // g(C_i) after the i-th pick.
  std::vector<double> utility_after;
  double g_total = 0.0;
  double p_param = 0.0;
  double weight_scale = 1.0;

  // alpha_i = g(X) - g(C_i) - p * opt for i = 0..picks.size(), with opt in
  // raw units (normalized internally).
  std::vector<double> alpha(double opt_raw) const {
    const double opt = opt_raw * weight_scale;
    std::vector<double> out;
    out.reserve(picks.size() + 1);
    out.push_back(g_total - p_param * opt);
    for (double g : utility_after) out.push_back(g_total - g - p_param * opt);
    return out;
  }
};

struct GreedyResult {
  BitSet solution;
  double cost = 0.0;
  GreedyTrace trace;
};

// Throws StalledProgress when g(C) < g(X) but no element has positive gain.
inline GreedyResult greedy_solve(const CoverProblem& problem) {
  const std::size_t n = problem.n();
  GreedyResult result;
  result.solution = BitSet(n);
  result.trace.g_total = problem.g_total();
  result.trace.p_param = problem.p_param();
  result.trace.weight_scale = problem.weight_scale();
  double current = 0.0;
  while (!problem.is_feasible_value(current)) {
    const std::vector<double> gains = problem.utility().gains(result.solution);
    std::optional<std::size_t> best;
    for (std::size_t v = 0; v < n; ++v) {
      if (result.solution.test(v) || !(gains[v] > kGainEpsilon)) continue;
      // gains[v] / w(v) > gains[best] / w(best), strictly, so the smallest
      // index wins ties.
      if (!best || gains[v] * problem.weight(*best) > gains[*best] * problem.weight(v))
        best = v;
    }
    if (!best)
      throw StalledProgress("no element has positive marginal gain at g(C) = " +
                            std::to_string(current) + " < g(X) = " +
                            std::to_string(problem.g_total()));
    const std::size_t v = *best;
    const double w = problem.weight(v);
    result.trace.picks.push_back({v, gains[v], w, gains[v] / w});
    result.solution.set(v);
    result.cost += w;
    current = problem.g(result.solution);
    result.trace.utility_after.push_back(current);
  }
  return result;
}

// alpha_i <= exp(-w(b_i) / opt) * alpha_{i-1} for every i with
// alpha_{i-1} > 0, up to relative tolerance 1e-9. Weights and opt are
// compared in normalized units.
inline bool verify_alpha_decay(const GreedyTrace& trace, double opt_raw) {
  if (!(opt_raw > 0.0)) throw InvalidArgument("opt must be positive");
  const double opt = opt_raw * trace.weight_scale;
  const std::vector<double> alpha = trace.alpha(opt_raw);
  for (std::size_t i = 1; i < alpha.size(); ++i) {
    if (!(alpha[i - 1] > 0.0)) continue;
    const double w = trace.picks[i - 1].weight * trace.weight_scale;
    const double rhs = std::exp(-w / opt) * alpha[i - 1];
    if (alpha[i] > rhs + 1e-9 * alpha[i - 1]) return false;
  }
  return true;
}

}  // namespace gcover

#endif  // GCOVER_GREEDY_HPP_
