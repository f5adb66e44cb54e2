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

// Minimum connected dominating set as a general cover problem.
//
// With p(C) the number of components of G[C] and q(C) the number of
// components of the spanning subgraph formed by the edges incident with C,
// the potential g(C) = n - p(C) - q(C) is normalized (g(empty) = n - 0 - n),
// monotone, and reaches g(V) = n - 2 exactly on connected dominating sets.
// It is not submodular, but along a connected ordering of an optimal CDS the
// marginal gains shrink by at most 1, so p = 1.

#ifndef GCOVER_PROBLEMS_CDS_HPP_
#define GCOVER_PROBLEMS_CDS_HPP_

#include <algorithm>
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

class CdsUtility final : public Utility {
 public:
  explicit CdsUtility(Graph graph) : graph_(std::move(graph)) {}

  double value(const BitSet& c) const override {
    const auto p = count_induced_components(graph_, c);
    const auto q = count_incident_components(graph_, c);
    return static_cast<double>(graph_.n()) - static_cast<double>(p) -
           static_cast<double>(q);
  }

  double gain(const BitSet& c, std::size_t v) const override {
    UnionFind induced = induced_forest(graph_, c);
    UnionFind incident = incident_forest(graph_, c);
    return static_cast<double>(gain_from(c, v, induced, incident));
  }

  // Builds both forests once and derives every single-vertex gain from them.
  std::vector<double> gains(const BitSet& c) const override {
    UnionFind induced = induced_forest(graph_, c);
    UnionFind incident = incident_forest(graph_, c);
    std::vector<double> out(graph_.n(), 0.0);
    for (std::size_t v = 0; v < graph_.n(); ++v)
      if (!c.test(v)) out[v] = static_cast<double>(gain_from(c, v, induced, incident));
    return out;
  }

  bool integer_valued() const override { return true; }

  const Graph& graph() const { return graph_; }

 private:
  // Adding v merges the k distinct G[C] components it touches into one
  // (p drops by k - 1) and unites v with all of its neighbors in the
  // incident-edge forest (q drops by r - 1, r = distinct roots among v and
  // its neighbors).
  long gain_from(const BitSet& c, std::size_t v, UnionFind& induced,
                 UnionFind& incident) const {
    std::vector<std::size_t> roots;
    roots.reserve(graph_.degree(v) + 1);
    for (std::size_t u : graph_.neighbors(v))
      if (c.test(u)) roots.push_back(induced.find(u));
    const long k = static_cast<long>(distinct(roots));
    roots.clear();
    roots.push_back(incident.find(v));
    for (std::size_t u : graph_.neighbors(v)) roots.push_back(incident.find(u));
    const long r = static_cast<long>(distinct(roots));
    return (k - 1) + (r - 1);
  }

  static std::size_t distinct(std::vector<std::size_t>& xs) {
    std::sort(xs.begin(), xs.end());
    return static_cast<std::size_t>(std::unique(xs.begin(), xs.end()) - xs.begin());
  }

  Graph graph_;
};

// Unit weights, delta = 1, p = 1. Requires a connected graph on n >= 3
// vertices.
inline CoverProblem cds_problem(const Graph& g, std::string name = "cds") {
  if (g.n() < 3) throw InvalidArgument("connected dominating set needs n >= 3");
  if (!g.connected()) throw DisconnectedGraph("graph is not connected");
  std::vector<double> weights(g.n(), 1.0);
  return CoverProblem(std::move(name), std::move(weights), std::make_shared<CdsUtility>(g),
                      1.0, 1.0, DeltaSource::kAnalytic);
}

// C is a connected dominating set of g.
inline bool is_connected_dominating_set(const Graph& g, const BitSet& c) {
  if (c.empty_set()) return false;
  if (count_induced_components(g, c) != 1) return false;
  for (std::size_t v = 0; v < g.n(); ++v) {
    if (c.test(v)) continue;
    const auto& nb = g.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&](std::size_t u) { return c.test(u); }))
      return false;
  }
  return true;
}

}  // namespace gcover

#endif  // GCOVER_PROBLEMS_CDS_HPP_
