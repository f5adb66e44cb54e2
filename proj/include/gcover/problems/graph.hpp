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

#ifndef GCOVER_PROBLEMS_GRAPH_HPP_
#define GCOVER_PROBLEMS_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "gcover/bitset.hpp"
#include "gcover/errors.hpp"

namespace gcover {

// Disjoint sets with union by size and path halving; tracks the number of
// sets so component counts are available in O(1).
class UnionFind {
 public:
  explicit UnionFind(std::size_t n = 0) : parent_(n), size_(n, 1), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns true if x and y were in different sets.
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    --sets_;
    return true;
  }

  std::size_t set_count() const { return sets_; }
  std::size_t element_count() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t sets_;
};

// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adjacency_(n) {}

  // Throws InvalidArgument on loops, duplicates or out-of-range endpoints.
  Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
      : adjacency_(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  void add_edge(std::size_t u, std::size_t v) {
    if (u >= n() || v >= n()) throw InvalidArgument("edge endpoint out of range");
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u + 1));
    if (has_edge(u, v))
      throw InvalidArgument("duplicate edge " + std::to_string(u + 1) + " " +
                            std::to_string(v + 1));
    auto insert_sorted = [](std::vector<std::size_t>& list, std::size_t x) {
      list.insert(std::lower_bound(list.begin(), list.end(), x), x);
    };
    insert_sorted(adjacency_[u], v);
    insert_sorted(adjacency_[v], u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }

  bool has_edge(std::size_t u, std::size_t v) const {
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
  }

  std::size_t n() const { return adjacency_.size(); }
  std::size_t m() const { return edges_.size(); }
  // Neighbors in increasing order.
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }
  // Edges in insertion order, each stored as (min, max).
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& list : adjacency_) d = std::max(d, list.size());
    return d;
  }

  bool connected() const {
    if (n() == 0) return true;
    UnionFind uf(n());
    for (auto [u, v] : edges_) uf.unite(u, v);
    return uf.set_count() == 1;
  }

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

// Union-find over the subgraph G[C] induced by `subset`; vertices outside
// the subset are ignored (they remain singletons and are not counted).
inline UnionFind induced_forest(const Graph& g, const BitSet& subset) {
  UnionFind uf(g.n());
  for (auto [u, v] : g.edges())
    if (subset.test(u) && subset.test(v)) uf.unite(u, v);
  return uf;
}

// Union-find over the spanning subgraph whose edges are those with at least
// one endpoint in `subset`.
inline UnionFind incident_forest(const Graph& g, const BitSet& subset) {
  UnionFind uf(g.n());
  for (auto [u, v] : g.edges())
    if (subset.test(u) || subset.test(v)) uf.unite(u, v);
  return uf;
}

// Number of connected components of G[C]; 0 for the empty set.
inline std::size_t count_induced_components(const Graph& g, const BitSet& subset) {
  UnionFind uf = induced_forest(g, subset);
  // Every vertex outside the subset is a singleton set in uf.
  return uf.set_count() - (g.n() - subset.count());
}

// Number of connected components of the spanning subgraph on all n vertices
// made of the edges incident with C.
inline std::size_t count_incident_components(const Graph& g, const BitSet& subset) {
  return incident_forest(g, subset).set_count();
}

// Orders the vertices of C so that every prefix induces a connected subgraph:
// breadth-first search inside G[C] from its smallest vertex, neighbors in
// increasing order. Throws NotConnected when G[C] is disconnected.
inline std::vector<std::size_t> connected_ordering(const Graph& g, const BitSet& subset) {
  std::vector<std::size_t> order;
  const std::size_t total = subset.count();
  if (total == 0) return order;
  order.reserve(total);
  BitSet seen(g.n());
  std::deque<std::size_t> queue;
  std::size_t start = 0;
  while (!subset.test(start)) ++start;
  seen.set(start);
  queue.push_back(start);
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    order.push_back(u);
    for (std::size_t w : g.neighbors(u)) {
      if (subset.test(w) && !seen.test(w)) {
        seen.set(w);
        queue.push_back(w);
      }
    }
  }
  if (order.size() != total) throw NotConnected("G[C] is not connected");
  return order;
}

}  // namespace gcover

#endif  // GCOVER_PROBLEMS_GRAPH_HPP_
