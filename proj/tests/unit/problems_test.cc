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

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "support/brute_force.hpp"
#include "support/test_utilities.hpp"

namespace gcover {
namespace {

TEST(UnionFind, CountsSets) {
  UnionFind uf(5);
  EXPECT_EQ(uf.set_count(), 5u);
  EXPECT_TRUE(uf.unite(0, 1));
  EXPECT_TRUE(uf.unite(3, 4));
  EXPECT_FALSE(uf.unite(1, 0));
  EXPECT_EQ(uf.set_count(), 3u);
  EXPECT_EQ(uf.find(0), uf.find(1));
  EXPECT_NE(uf.find(0), uf.find(3));
}

TEST(Graph, RejectsNonSimpleEdges) {
  Graph g(3);
  g.add_edge(0, 1);
  EXPECT_THROW(g.add_edge(1, 0), InvalidArgument);
  EXPECT_THROW(g.add_edge(2, 2), InvalidArgument);
  EXPECT_THROW(g.add_edge(0, 3), InvalidArgument);
  EXPECT_FALSE(g.connected());
  g.add_edge(2, 1);
  EXPECT_TRUE(g.connected());
  EXPECT_EQ(g.neighbors(1), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(g.max_degree(), 2u);
}

TEST(Graph, ComponentCountsMatchReference) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& [adj, edges] : bf::connected_graphs(n)) {
      const Graph g(n, edges);
      for (bf::Mask m = 0; m < (bf::Mask{1} << n); ++m) {
        const BitSet c = BitSet::from_mask(n, m);
        ASSERT_EQ(count_induced_components(g, c), bf::induced_components(adj, m));
        ASSERT_EQ(count_incident_components(g, c), bf::incident_components(adj, m));
      }
    }
  }
}

TEST(SetCover, ThreeSetUtility) {
  const CoverProblem p = set_cover_problem(testing::three_set_instance());
  EXPECT_EQ(p.g_total(), 3.0);
  EXPECT_EQ(p.beta(), 3);
  EXPECT_EQ(p.delta(), 1.0);
  EXPECT_EQ(p.p_param(), 0.0);
  EXPECT_EQ(p.delta_source(), DeltaSource::kAnalytic);
  EXPECT_EQ(p.g(BitSet::from_indices(3, {0})), 2.0);
  EXPECT_EQ(p.g(BitSet::from_indices(3, {1})), 1.0);
}

TEST(SetCover, UtilityMatchesReferenceCount) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = random_set_cover(9, 7, 0.3, {1.0, 3.0}, seed);
    const bf::SetSystem ref = testing::to_bf(inst);
    const CoverProblem p = set_cover_problem(inst);
    for (bf::Mask m = 0; m < (bf::Mask{1} << 7); ++m) {
      const BitSet c = BitSet::from_mask(7, m);
      ASSERT_EQ(p.g(c), static_cast<double>(bf::covered_count(ref, m)));
      const auto gains = p.utility().gains(c);
      for (std::size_t v = 0; v < 7; ++v) {
        if ((m >> v) & 1U) continue;
        const double expected = static_cast<double>(bf::covered_count(ref, m | (bf::Mask{1} << v))) -
                                static_cast<double>(bf::covered_count(ref, m));
        ASSERT_EQ(gains[v], expected);
        ASSERT_EQ(p.utility().gain(c, v), expected);
      }
    }
  }
}

TEST(SetCover, ValidationErrors) {
  SetSystemInstance inst;
  inst.universe = 3;
  inst.sets = {{1.0, {0, 1}}};
  EXPECT_THROW(set_cover_problem(inst), UncoverableInstance);
  inst.sets = {{1.0, {0, 1, 5}}};
  EXPECT_THROW(set_cover_problem(inst), InvalidArgument);
  inst.sets = {{0.0, {0, 1, 2}}};
  EXPECT_THROW(set_cover_problem(inst), InvalidArgument);
}

TEST(VertexCover, CountsCoveredEdges) {
  const Graph g = testing::path4();
  const CoverProblem p = vertex_cover_problem(g, {});
  EXPECT_EQ(p.g_total(), 3.0);
  EXPECT_EQ(p.g(BitSet::from_indices(4, {1})), 2.0);
  EXPECT_EQ(p.g(BitSet::from_indices(4, {1, 2})), 3.0);
  EXPECT_THROW(vertex_cover_problem(g, {1.0, 2.0}), InvalidArgument);
  const GreedyResult r = greedy_solve(p);
  EXPECT_EQ(r.cost, 2.0);
}

TEST(WeightedCoverage, ExactDeltaMatchesReference) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto inst = random_weighted_coverage(10, 6, 0.3, {0.5, 3.0}, {1.0, 2.0}, seed);
    const CoverProblem p = weighted_coverage_problem(inst);
    EXPECT_EQ(p.delta_source(), DeltaSource::kExhaustive);
    // Reference: minimum positive difference of item-value sums over all
    // (C, v) pairs, computed from raw membership lists.
    double best = 1e300;
    for (bf::Mask m = 0; m < 64; ++m) {
      std::vector<bool> cov(10, false);
      for (std::size_t s = 0; s < 6; ++s)
        if ((m >> s) & 1U)
          for (std::size_t i : inst.sets[s].members) cov[i] = true;
      for (std::size_t v = 0; v < 6; ++v) {
        if ((m >> v) & 1U) continue;
        double fresh = 0.0;
        std::vector<bool> counted(10, false);
        for (std::size_t i : inst.sets[v].members)
          if (!cov[i] && !counted[i]) {
            fresh += inst.item_values[i];
            counted[i] = true;
          }
        if (fresh > 1e-12) best = std::min(best, fresh);
      }
    }
    EXPECT_NEAR(p.delta(), best, 1e-12 * best) << "seed " << seed;
    EXPECT_GE(p.delta(), *std::min_element(inst.item_values.begin(), inst.item_values.end()));
  }
}

TEST(WeightedCoverage, LargeInstancesUseLowerBound) {
  const auto inst = random_weighted_coverage(30, kExactDeltaMaxSets + 2, 0.2, {0.5, 3.0},
                                             {1.0, 2.0}, 3);
  const CoverProblem p = weighted_coverage_problem(inst);
  EXPECT_EQ(p.delta_source(), DeltaSource::kLowerBound);
  EXPECT_FALSE(is_certified(p.delta_source()));
  EXPECT_EQ(p.delta(), *std::min_element(inst.item_values.begin(), inst.item_values.end()));
}

TEST(WeightedCoverage, IntegralValuesAreDetected) {
  WeightedCoverageInstance inst;
  inst.item_values = {1.0, 2.0, 3.0};
  inst.sets = {{1.0, {0, 1}}, {1.0, {2}}};
  EXPECT_TRUE(weighted_coverage_problem(inst).integer_valued());
  inst.item_values[0] = 0.5;
  EXPECT_FALSE(weighted_coverage_problem(inst).integer_valued());
  inst.item_values[0] = -1.0;
  EXPECT_THROW(weighted_coverage_problem(inst), InvalidArgument);
}

TEST(Io, SetSystemRoundTrip) {
  const auto inst = random_set_cover(12, 9, 0.3, {1.0, 5.0}, 42);
  std::ostringstream out;
  write_set_system(out, inst);
  std::istringstream in(out.str());
  const auto back = read_set_system(in);
  ASSERT_EQ(back.universe, inst.universe);
  ASSERT_EQ(back.sets.size(), inst.sets.size());
  for (std::size_t s = 0; s < inst.sets.size(); ++s) {
    EXPECT_EQ(back.sets[s].cost, inst.sets[s].cost);
    EXPECT_EQ(back.sets[s].members, inst.sets[s].members);
  }
  std::ostringstream again;
  write_set_system(again, back);
  EXPECT_EQ(again.str(), out.str());
}

TEST(Io, GraphAndCoverageRoundTrip) {
  const Graph g = random_connected_graph(9, 0.3, 8);
  std::ostringstream gout;
  write_graph(gout, g);
  std::istringstream gin(gout.str());
  const Graph gb = read_graph(gin);
  EXPECT_EQ(gb.edges(), g.edges());

  const auto wc = random_weighted_coverage(8, 5, 0.4, {0.1, 2.0}, {1.0, 3.0}, 8);
  std::ostringstream wout;
  write_weighted_coverage(wout, wc);
  std::istringstream win(wout.str());
  const auto wb = read_weighted_coverage(win);
  EXPECT_EQ(wb.item_values, wc.item_values);
  ASSERT_EQ(wb.sets.size(), wc.sets.size());
  for (std::size_t s = 0; s < wc.sets.size(); ++s) EXPECT_EQ(wb.sets[s].members, wc.sets[s].members);
}

TEST(Io, CommentsAndWhitespaceAreIgnored) {
  std::istringstream in("# three sets\n3 3\n1 2 1 2  # S1\n1 1 3\n3 3 1 2 3\n");
  const auto inst = read_set_system(in);
  EXPECT_EQ(inst.universe, 3u);
  EXPECT_EQ(inst.sets[2].members, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Io, ParseErrors) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_set_system(in);
  };
  EXPECT_THROW(parse("3 1\n1 2 1"), ParseError);          // truncated
  EXPECT_THROW(parse("3 1\n1 1 4\n"), ParseError);        // id out of range
  EXPECT_THROW(parse("3 1\nx 1 1\n"), ParseError);        // bad number
  EXPECT_THROW(parse("3 1\n-1 3 1 2 3\n"), ParseError);   // negative cost
  EXPECT_THROW(parse("3 1\n1 3 1 2 3\n7\n"), ParseError); // trailing token
  EXPECT_THROW(parse("3 1\n1 2 1 2\n"), UncoverableInstance);
  std::istringstream loop("2 1\n1 1\n");
  EXPECT_THROW(read_graph(loop), ParseError);
  std::istringstream dup("2 2\n1 2\n2 1\n");
  EXPECT_THROW(read_graph(dup), ParseError);
}

TEST(Generators, AreDeterministic) {
  auto text = [](const SetSystemInstance& s) {
    std::ostringstream o;
    write_set_system(o, s);
    return o.str();
  };
  EXPECT_EQ(text(random_set_cover(20, 10, 0.2, {1.0, 4.0}, 5)),
            text(random_set_cover(20, 10, 0.2, {1.0, 4.0}, 5)));
  EXPECT_NE(text(random_set_cover(20, 10, 0.2, {1.0, 4.0}, 5)),
            text(random_set_cover(20, 10, 0.2, {1.0, 4.0}, 6)));
  EXPECT_EQ(random_connected_graph(15, 0.1, 3).edges(), random_connected_graph(15, 0.1, 3).edges());
}

TEST(Generators, OutputsAreValid) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    EXPECT_NO_THROW(validate(random_set_cover(15, 6, 0.05, {1.0, 2.0}, seed)));
    const Graph tree = random_connected_graph(12, 0.0, seed);
    EXPECT_TRUE(tree.connected());
    EXPECT_EQ(tree.m(), 11u);
    EXPECT_TRUE(random_connected_graph(12, 0.2, seed).connected());
  }
  const Graph complete = random_connected_graph(6, 1.0, 1);
  EXPECT_EQ(complete.m(), 15u);
  const auto dense = random_set_cover(5, 3, 1.0, {2.0, 2.0}, 1);
  for (const auto& s : dense.sets) {
    EXPECT_EQ(s.members.size(), 5u);
    EXPECT_EQ(s.cost, 2.0);
  }
  EXPECT_THROW(random_set_cover(5, 3, 1.5, {1.0, 1.0}, 1), InvalidArgument);
  EXPECT_THROW(random_set_cover(5, 3, 0.5, {2.0, 1.0}, 1), InvalidArgument);
}

}  // namespace
}  // namespace gcover
