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

// Real-valued submodular cover: items carry positive values and g(C) is the
// total value of the items covered by the chosen sets.

#ifndef GCOVER_PROBLEMS_WEIGHTED_COVERAGE_HPP_
#define GCOVER_PROBLEMS_WEIGHTED_COVERAGE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gcover/bitset.hpp"
#include "gcover/cover_problem.hpp"
#include "gcover/errors.hpp"
#include "gcover/problems/set_cover.hpp"

namespace gcover {

struct WeightedCoverageInstance {
  std::vector<double> item_values;
  std::vector<WeightedSubset> sets;  // members are item ids
  std::string name = "wcoverage";
};

class WeightedCoverageUtility final : public Utility {
 public:
  WeightedCoverageUtility(std::vector<double> values, std::vector<BitSet> sets)
      : values_(std::move(values)), sets_(std::move(sets)) {
    integral_ = std::all_of(values_.begin(), values_.end(),
                            [](double x) { return x == std::floor(x); });
  }

  double value(const BitSet& chosen) const override { return sum(covered(chosen)); }

  double gain(const BitSet& chosen, std::size_t v) const override {
    BitSet fresh = sets_[v];
    fresh.subtract(covered(chosen));
    return sum(fresh);
  }

  std::vector<double> gains(const BitSet& chosen) const override {
    const BitSet cov = covered(chosen);
    std::vector<double> out(sets_.size(), 0.0);
    for (std::size_t v = 0; v < sets_.size(); ++v) {
      if (chosen.test(v)) continue;
      BitSet fresh = sets_[v];
      fresh.subtract(cov);
      out[v] = sum(fresh);
    }
    return out;
  }

  bool integer_valued() const override { return integral_; }

  BitSet covered(const BitSet& chosen) const {
    BitSet cov(values_.size());
    chosen.for_each([&](std::size_t v) { cov |= sets_[v]; });
    return cov;
  }
  const std::vector<double>& values() const { return values_; }
  const std::vector<BitSet>& sets() const { return sets_; }

 private:
  // Summed in item order so equal item sets always give bit-identical sums.
  double sum(const BitSet& items) const {
    double total = 0.0;
    items.for_each([&](std::size_t i) { total += values_[i]; });
    return total;
  }

  std::vector<double> values_;
  std::vector<BitSet> sets_;
  bool integral_ = false;
};

inline void validate(const WeightedCoverageInstance& inst) {
  for (std::size_t i = 0; i < inst.item_values.size(); ++i)
    if (!(inst.item_values[i] > 0.0) || !std::isfinite(inst.item_values[i]))
      throw InvalidArgument("item " + std::to_string(i + 1) + " has non-positive value");
  for (std::size_t s = 0; s < inst.sets.size(); ++s) {
    if (!(inst.sets[s].cost > 0.0))
      throw InvalidArgument("set " + std::to_string(s + 1) + " has non-positive cost");
    for (std::size_t i : inst.sets[s].members)
      if (i >= inst.item_values.size())
        throw InvalidArgument("set " + std::to_string(s + 1) + " names unknown item " +
                              std::to_string(i + 1));
  }
}

// Largest ground set for which delta is certified by enumerating every
// (C, v) pair.
inline constexpr std::size_t kExactDeltaMaxSets = 16;

// Minimum positive marginal over all (C, v). Because every positive gain
// contains at least one whole item, the result is at least the smallest item
// value.
inline double exact_min_positive_gain(const WeightedCoverageUtility& u) {
  const std::size_t n = u.sets().size();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto gains = u.gains(BitSet::from_mask(n, mask));
    for (std::size_t v = 0; v < n; ++v)
      if (!((mask >> v) & 1U) && gains[v] > kGainEpsilon) best = std::min(best, gains[v]);
  }
  return best;
}

// delta is certified by exhaustive enumeration for up to kExactDeltaMaxSets
// sets; larger instances fall back to the smallest item value, which lower
// bounds every positive gain, and are labeled heuristic. p = 0.
inline CoverProblem weighted_coverage_problem(const WeightedCoverageInstance& inst) {
  validate(inst);
  std::vector<BitSet> sets;
  std::vector<double> costs;
  for (const auto& s : inst.sets) {
    sets.push_back(BitSet::from_indices(inst.item_values.size(), s.members));
    costs.push_back(s.cost);
  }
  auto utility =
      std::make_shared<WeightedCoverageUtility>(inst.item_values, std::move(sets));
  double delta = std::numeric_limits<double>::infinity();
  DeltaSource source = DeltaSource::kExhaustive;
  if (inst.sets.size() <= kExactDeltaMaxSets) {
    delta = exact_min_positive_gain(*utility);
  }
  if (!std::isfinite(delta)) {
    // Too large to enumerate, or no set covers anything.
    source = DeltaSource::kLowerBound;
    delta = inst.item_values.empty()
                ? 1.0
                : *std::min_element(inst.item_values.begin(), inst.item_values.end());
  }
  return CoverProblem(inst.name, std::move(costs), std::move(utility), delta, 0.0, source);
}

}  // namespace gcover

#endif  // GCOVER_PROBLEMS_WEIGHTED_COVERAGE_HPP_
