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
#include <cmath>
#include <cstdint>
#include <vector>

#include "support/brute_force.hpp"
#include "support/test_utilities.hpp"

namespace gcover {
namespace {

std::vector<std::size_t> pick_order(const GreedyResult& r) {
  std::vector<std::size_t> out;
  for (const auto& p : r.trace.picks) out.push_back(p.element);
  return out;
}

TEST(Greedy, ThreeSetExample) {
  const CoverProblem p = set_cover_problem(testing::three_set_instance());
  const GreedyResult r = greedy_solve(p);
  EXPECT_EQ(pick_order(r), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.cost, 2.0);
  EXPECT_EQ(r.trace.picks[0].cost_effectiveness, 2.0);
  EXPECT_EQ(r.trace.picks[1].cost_effectiveness, 1.0);
  EXPECT_EQ(r.trace.utility_after, (std::vector<double>{2.0, 3.0}));
}

TEST(Greedy, SingleCoveringSet) {
  SetSystemInstance inst;
  inst.universe = 4;
  inst.sets = {{2.0, {0, 1, 2, 3}}};
  const GreedyResult r = greedy_solve(set_cover_problem(inst));
  EXPECT_EQ(pick_order(r), (std::vector<std::size_t>{0}));
  EXPECT_EQ(r.cost, 2.0);
}

TEST(Greedy, StallsWhenNoElementHelps) {
  // g jumps only when both elements are present.
  const CoverProblem p =
      testing::mask_problem({1.0, 1.0}, [](std::uint64_t m) { return m == 3 ? 1.0 : 0.0; }, 1.0);
  EXPECT_THROW(greedy_solve(p), StalledProgress);
}

TEST(Greedy, TiesGoToSmallestIndex) {
  SetSystemInstance inst;
  inst.universe = 2;
  inst.sets = {{2.0, {0}}, {1.0, {1}}, {1.0, {0}}, {2.0, {0, 1}}};
  // Sets 1, 2 and 3 all have ratio 1; set 1 wins, then set 2 beats set 0.
  const GreedyResult r = greedy_solve(set_cover_problem(inst));
  EXPECT_EQ(pick_order(r), (std::vector<std::size_t>{1, 2}));
}

TEST(GreedyBound, FormulaExamples) {
  BoundInputs in{0.0, 1.0, 1.0, 100.0, 100.0};
  EXPECT_NEAR(greedy_ratio_bound(in, 5.0), 1.0 + std::log(20.0), 1e-12);
  EXPECT_NEAR(greedy_ratio_bound(in, 5.0), 3.9957, 1e-4);
  in.g_total = 4.0;
  EXPECT_EQ(greedy_ratio_bound(in, 5.0), 1.0);
  in.g_total = 5.0;  // g(X) - (p + 1) opt = 0 still clamps
  EXPECT_EQ(greedy_ratio_bound(in, 5.0), 1.0);
  EXPECT_THROW(greedy_ratio_bound(in, 0.0), InvalidArgument);
}

TEST(GreedyBound, CdsForm) {
  for (int n = 5; n <= 12; ++n) {
    for (double opt = 1.0; opt <= 4.0; opt += 1.0) {
      const BoundInputs in{1.0, 1.0, 1.0, n - 2.0, n - 2.0};
      const double expected =
          n - 2.0 - 2.0 * opt > 0.0 ? 2.0 + std::log((n - 2.0 - opt) / opt) : 2.0;
      EXPECT_NEAR(greedy_ratio_bound(in, opt), expected, 1e-12);
    }
  }
}

TEST(GreedyBound, UsesNormalizedWeights) {
  SetSystemInstance inst = testing::three_set_instance();
  for (auto& s : inst.sets) s.cost *= 4.0;
  const CoverProblem p = set_cover_problem(inst);
  // w_max / w_min = 3; raw opt 8 -> normalized 2; g(X) = 3.
  EXPECT_NEAR(greedy_ratio_bound(p, 8.0), 3.0 + std::log(1.5), 1e-12);
}

TEST(AlphaDecay, HoldsOnRandomUnitSetCover) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto inst = random_set_cover(8, 8, 0.3, {1.0, 1.0}, seed);
    const bf::Opt opt = bf::set_cover_opt(testing::to_bf(inst));
    ASSERT_TRUE(opt.found);
    const GreedyResult r = greedy_solve(set_cover_problem(inst));
    EXPECT_TRUE(verify_alpha_decay(r.trace, opt.cost)) << "seed " << seed;
  }
}

TEST(AlphaDecay, VacuousCases) {
  GreedyTrace one;
  one.g_total = 1.0;
  one.picks = {{0, 1.0, 1.0, 1.0}};
  one.utility_after = {1.0};
  EXPECT_TRUE(verify_alpha_decay(one, 1.0));

  GreedyTrace nonpositive;
  nonpositive.g_total = 2.0;
  nonpositive.p_param = 1.0;
  nonpositive.picks = {{0, 1.0, 5.0, 0.2}, {1, 1.0, 5.0, 0.2}};
  nonpositive.utility_after = {1.0, 2.0};
  // alpha_0 = 2 - 3 < 0: nothing to check.
  EXPECT_TRUE(verify_alpha_decay(nonpositive, 3.0));
}

TEST(AlphaDecay, DetectsSlowDecay) {
  GreedyTrace t;
  t.g_total = 10.0;
  t.picks = {{0, 1.0, 1.0, 1.0}};
  t.utility_after = {1.0};
  // alpha: 10 -> 9, while exp(-1/2) * 10 ~ 6.07.
  EXPECT_FALSE(verify_alpha_decay(t, 2.0));
}

// Property sweep: ratio bound, gain >= delta and determinism on random
// weighted set cover with n <= 12 sets.
TEST(Greedy, RatioBoundAndGainsOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t sets = 4 + seed % 9;
    const ValueRange costs = seed % 2 == 0 ? ValueRange{1.0, 1.0} : ValueRange{1.0, 4.0};
    const auto inst = random_set_cover(6 + seed % 5, sets, 0.35, costs, seed);
    const bf::SetSystem ref = testing::to_bf(inst);
    const bf::Opt opt = bf::set_cover_opt(ref);
    const CoverProblem p = set_cover_problem(inst);
    const GreedyResult r = greedy_solve(p);
    EXPECT_EQ(bf::covered_count(ref, testing::to_mask(r.solution)),
              bf::covered_count(ref, (bf::Mask{1} << sets) - 1));
    const double w_min = *std::min_element(ref.costs.begin(), ref.costs.end());
    const double w_max = *std::max_element(ref.costs.begin(), ref.costs.end());
    const double g_total = static_cast<double>(bf::covered_count(ref, (bf::Mask{1} << sets) - 1));
    const double opt_n = opt.cost / w_min;
    const double bound = w_max / w_min + (g_total - opt_n > 0.0 ? std::log(g_total / opt_n) : 0.0);
    EXPECT_LE(r.cost, bound * opt.cost * (1.0 + 1e-9)) << "seed " << seed;
    for (const auto& pick : r.trace.picks) EXPECT_GE(pick.gain, p.delta());
    EXPECT_EQ(pick_order(greedy_solve(p)), pick_order(r));
  }
}

TEST(AlphaDecay, HoldsOnCdsOverAllSmallGraphs) {
  for (std::size_t n = 3; n <= 5; ++n) {
    for (const auto& [adj, edges] : bf::connected_graphs(n)) {
      const Graph g(n, edges);
      const bf::Opt opt = bf::cds_opt(adj);
      const GreedyResult r = greedy_solve(cds_problem(g));
      EXPECT_TRUE(bf::is_cds(adj, testing::to_mask(r.solution)));
      EXPECT_TRUE(verify_alpha_decay(r.trace, opt.cost));
      const double gx = n - 2.0;
      const double bound = gx - 2.0 * opt.cost > 0.0 ? 2.0 + std::log((gx - opt.cost) / opt.cost) : 2.0;
      EXPECT_LE(r.cost, bound * opt.cost * (1.0 + 1e-9));
    }
  }
}

}  // namespace
}  // namespace gcover
