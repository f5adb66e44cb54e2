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

#ifndef GCOVER_PROBLEMS_SET_COVER_HPP_
#define GCOVER_PROBLEMS_SET_COVER_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gcover/bitset.hpp"
#include "gcover/cover_problem.hpp"
#include "gcover/errors.hpp"
#include "gcover/problems/graph.hpp"

namespace gcover {

struct WeightedSubset {
  double cost = 1.0;
  std::vector<std::size_t> members;  // 0-based element ids
};

// Universe {0..universe-1} and a collection of weighted subsets of it.
struct SetSystemInstance {
  std::size_t universe = 0;
  std::vector<WeightedSubset> sets;
  std::string name = "setcover";
};

// g(C) = number of universe elements covered by the chosen sets.
class CoverageCountUtility final : public Utility {
 public:
  CoverageCountUtility(std::size_t universe, std::vector<BitSet> sets)
      : universe_(universe), sets_(std::move(sets)) {}

  double value(const BitSet& chosen) const override {
    return static_cast<double>(covered(chosen).count());
  }
  double gain(const BitSet& chosen, std::size_t v) const override {
    return static_cast<double>(sets_[v].count_minus(covered(chosen)));
  }
  std::vector<double> gains(const BitSet& chosen) const override {
    const BitSet cov = covered(chosen);
    std::vector<double> out(sets_.size(), 0.0);
    for (std::size_t v = 0; v < sets_.size(); ++v)
      if (!chosen.test(v)) out[v] = static_cast<double>(sets_[v].count_minus(cov));
    return out;
  }
  bool integer_valued() const override { return true; }

  BitSet covered(const BitSet& chosen) const {
    BitSet cov(universe_);
    chosen.for_each([&](std::size_t v) { cov |= sets_[v]; });
    return cov;
  }
  const std::vector<BitSet>& sets() const { return sets_; }

 private:
  std::size_t universe_;
  std::vector<BitSet> sets_;
};

// Checks ids and costs; throws UncoverableInstance when the union of the
// sets misses an element.
inline void validate(const SetSystemInstance& inst) {
  BitSet cov(inst.universe);
  for (std::size_t s = 0; s < inst.sets.size(); ++s) {
    const auto& set = inst.sets[s];
    if (!(set.cost > 0.0))
      throw InvalidArgument("set " + std::to_string(s + 1) + " has non-positive cost");
    for (std::size_t e : set.members) {
      if (e >= inst.universe)
        throw InvalidArgument("set " + std::to_string(s + 1) + " names element " +
                              std::to_string(e + 1) + " outside the universe");
      cov.set(e);
    }
  }
  if (cov.count() != inst.universe)
    throw UncoverableInstance("the sets cover only " + std::to_string(cov.count()) +
                              " of " + std::to_string(inst.universe) + " elements");
}

// Ground set = the sets; g = coverage count; delta = 1; p = 0.
inline CoverProblem set_cover_problem(const SetSystemInstance& inst) {
  validate(inst);
  std::vector<BitSet> sets;
  std::vector<double> costs;
  sets.reserve(inst.sets.size());
  for (const auto& s : inst.sets) {
    sets.push_back(BitSet::from_indices(inst.universe, s.members));
    costs.push_back(s.cost);
  }
  auto utility = std::make_shared<CoverageCountUtility>(inst.universe, std::move(sets));
  return CoverProblem(inst.name, std::move(costs), std::move(utility), 1.0, 0.0,
                      DeltaSource::kAnalytic);
}

// Ground set = vertices; g(C) = number of edges with an endpoint in C.
inline CoverProblem vertex_cover_problem(const Graph& g, std::vector<double> costs,
                                         std::string name = "vertexcover") {
  if (costs.empty()) costs.assign(g.n(), 1.0);
  if (costs.size() != g.n()) throw InvalidArgument("one cost per vertex required");
  std::vector<BitSet> incident(g.n(), BitSet(g.m()));
  for (std::size_t e = 0; e < g.m(); ++e) {
    incident[g.edges()[e].first].set(e);
    incident[g.edges()[e].second].set(e);
  }
  auto utility = std::make_shared<CoverageCountUtility>(g.m(), std::move(incident));
  return CoverProblem(std::move(name), std::move(costs), std::move(utility), 1.0, 0.0,
                      DeltaSource::kAnalytic);
}

}  // namespace gcover

#endif  // GCOVER_PROBLEMS_SET_COVER_HPP_
