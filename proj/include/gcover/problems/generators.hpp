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

// Seeded instance generators. Invalid samples are repaired rather than
// rejected, so every seed maps to exactly one instance.

#ifndef GCOVER_PROBLEMS_GENERATORS_HPP_
#define GCOVER_PROBLEMS_GENERATORS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gcover/errors.hpp"
#include "gcover/problems/graph.hpp"
#include "gcover/problems/set_cover.hpp"
#include "gcover/problems/weighted_coverage.hpp"
#include "gcover/rng.hpp"

namespace gcover {

struct ValueRange {
  double lo = 1.0;
  double hi = 1.0;
};

namespace detail {

inline void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0))
    throw InvalidArgument(std::string(what) + " must lie in [0, 1]");
}

inline void check_range(const ValueRange& r, const char* what) {
  if (!(r.lo > 0.0 && r.hi >= r.lo))
    throw InvalidArgument(std::string(what) + " range needs 0 < lo <= hi");
}

// Uniform in [lo, hi], rounded to two decimals and kept >= lo.
inline double draw_value(RngStream& rng, const ValueRange& r) {
  if (r.lo == r.hi) return r.lo;
  double x = std::round(rng.uniform(r.lo, r.hi) * 100.0) / 100.0;
  return x < r.lo ? r.lo : x;
}

inline std::vector<WeightedSubset> random_subsets(std::size_t universe, std::size_t count,
                                                  double density, const ValueRange& costs,
                                                  RngStream& rng) {
  std::vector<WeightedSubset> sets(count);
  for (auto& s : sets) {
    s.cost = draw_value(rng, costs);
    for (std::size_t e = 0; e < universe; ++e)
      if (rng.bernoulli(density)) s.members.push_back(e);
  }
  return sets;
}

}  // namespace detail

// Each set contains each element with probability `density`; elements left
// uncovered are added to a uniformly chosen set.
inline SetSystemInstance random_set_cover(std::size_t elements, std::size_t num_sets,
                                          double density, ValueRange costs,
                                          std::uint64_t seed) {
  detail::check_probability(density, "density");
  detail::check_range(costs, "cost");
  if (num_sets == 0 && elements > 0) throw InvalidArgument("need at least one set");
  RngStream rng(seed);
  SetSystemInstance inst;
  inst.universe = elements;
  inst.name = "setcover-" + std::to_string(seed);
  inst.sets = detail::random_subsets(elements, num_sets, density, costs, rng);
  BitSet covered(elements);
  for (const auto& s : inst.sets)
    for (std::size_t e : s.members) covered.set(e);
  for (std::size_t e = 0; e < elements; ++e) {
    if (covered.test(e)) continue;
    auto& target = inst.sets[rng.uniform_index(num_sets)].members;
    target.insert(std::lower_bound(target.begin(), target.end(), e), e);
  }
  return inst;
}

// Erdos-Renyi G(n, p) with connectivity repaired by attaching every further
// component to a random vertex of the components before it, so p = 0 yields
// a random tree.
inline Graph random_connected_graph(std::size_t n, double edge_prob, std::uint64_t seed) {
  detail::check_probability(edge_prob, "edge probability");
  RngStream rng(seed);
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.bernoulli(edge_prob)) g.add_edge(u, v);
  UnionFind uf(n);
  for (auto [u, v] : g.edges()) uf.unite(u, v);
  // Components in order of their smallest vertex.
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::size_t> slot(n, SIZE_MAX);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = uf.find(v);
    if (slot[root] == SIZE_MAX) {
      slot[root] = components.size();
      components.emplace_back();
    }
    components[slot[root]].push_back(v);
  }
  std::vector<std::size_t> attached = components.empty() ? std::vector<std::size_t>{}
                                                         : components.front();
  for (std::size_t c = 1; c < components.size(); ++c) {
    const auto& comp = components[c];
    const std::size_t u = comp[rng.uniform_index(comp.size())];
    const std::size_t v = attached[rng.uniform_index(attached.size())];
    g.add_edge(u, v);
    attached.insert(attached.end(), comp.begin(), comp.end());
  }
  return g;
}

// Item values and set costs are drawn from their ranges (two decimals).
// Sets cover each item with probability `density`; items no set covers are
// added to a random set.
inline WeightedCoverageInstance random_weighted_coverage(std::size_t items,
                                                         std::size_t num_sets,
                                                         double density, ValueRange values,
                                                         ValueRange costs,
                                                         std::uint64_t seed) {
  detail::check_probability(density, "density");
  detail::check_range(values, "value");
  detail::check_range(costs, "cost");
  if (num_sets == 0 && items > 0) throw InvalidArgument("need at least one set");
  RngStream rng(seed);
  WeightedCoverageInstance inst;
  inst.name = "wcoverage-" + std::to_string(seed);
  inst.item_values.reserve(items);
  for (std::size_t i = 0; i < items; ++i)
    inst.item_values.push_back(detail::draw_value(rng, values));
  inst.sets = detail::random_subsets(items, num_sets, density, costs, rng);
  BitSet covered(items);
  for (const auto& s : inst.sets)
    for (std::size_t i : s.members) covered.set(i);
  for (std::size_t i = 0; i < items; ++i) {
    if (covered.test(i)) continue;
    auto& target = inst.sets[rng.uniform_index(num_sets)].members;
    target.insert(std::lower_bound(target.begin(), target.end(), i), i);
  }
  return inst;
}

}  // namespace gcover

#endif  // GCOVER_PROBLEMS_GENERATORS_HPP_
