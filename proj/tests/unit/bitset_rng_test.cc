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

#include <cstdint>
#include <set>
#include <unordered_set>
#include <vector>

#include "gcover/bitset.hpp"
#include "gcover/rng.hpp"

namespace gcover {
namespace {

TEST(BitSet, SetTestCountAcrossWords) {
  BitSet b(130);
  b.set(0);
  b.set(63);
  b.set(64);
  b.set(129);
  EXPECT_EQ(b.count(), 4u);
  EXPECT_TRUE(b.test(63));
  EXPECT_TRUE(b[64]);
  EXPECT_FALSE(b.test(65));
  b.reset(63);
  b.flip(65);
  EXPECT_EQ(b.indices(), (std::vector<std::size_t>{0, 64, 65, 129}));
}

TEST(BitSet, FullKeepsUnusedBitsClear) {
  BitSet f = BitSet::full(70);
  EXPECT_EQ(f.count(), 70u);
  BitSet g(70);
  for (std::size_t i = 0; i < 70; ++i) g.set(i);
  EXPECT_EQ(f, g);
  EXPECT_EQ(f.hash(), g.hash());
}

TEST(BitSet, FromMaskAndIndices) {
  BitSet m = BitSet::from_mask(5, 0b10110);
  EXPECT_EQ(m, BitSet::from_indices(5, {1, 2, 4}));
  EXPECT_EQ(m.to_string(), "01101");
  // High bits beyond size are dropped.
  EXPECT_EQ(BitSet::from_mask(3, 0xFF).count(), 3u);
}

TEST(BitSet, SetAlgebra) {
  BitSet a = BitSet::from_indices(8, {0, 1, 2});
  BitSet b = BitSet::from_indices(8, {2, 3});
  EXPECT_EQ((a | b).indices(), (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ((a & b).indices(), (std::vector<std::size_t>{2}));
  BitSet c = a;
  c.subtract(b);
  EXPECT_EQ(c.indices(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(b.count_minus(a), 1u);
  EXPECT_TRUE(BitSet::from_indices(8, {1}).is_subset_of(a));
  EXPECT_FALSE(b.is_subset_of(a));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_FALSE(BitSet(8).intersects(a));
  EXPECT_TRUE(BitSet(8).empty_set());
}

TEST(BitSet, ForEachAscending) {
  BitSet b = BitSet::from_indices(200, {150, 3, 77, 64});
  std::vector<std::size_t> seen;
  b.for_each([&](std::size_t i) { seen.push_back(i); });
  EXPECT_EQ(seen, (std::vector<std::size_t>{3, 64, 77, 150}));
}

TEST(BitSet, LexLessOnSortedIndexLists) {
  EXPECT_TRUE(lex_less(BitSet::from_indices(4, {0, 2}), BitSet::from_indices(4, {1})));
  EXPECT_TRUE(lex_less(BitSet::from_indices(4, {0}), BitSet::from_indices(4, {0, 1})));
  EXPECT_FALSE(lex_less(BitSet::from_indices(4, {1}), BitSet::from_indices(4, {1})));
  EXPECT_TRUE(lex_less(BitSet(4), BitSet::from_indices(4, {3})));
}

TEST(BitSet, HashSeparatesSmallSets) {
  std::unordered_set<std::size_t> hashes;
  for (std::uint64_t m = 0; m < 1024; ++m) hashes.insert(BitSet::from_mask(10, m).hash());
  EXPECT_GT(hashes.size(), 1000u);
}

TEST(Rng, SameSeedSameStream) {
  RngStream a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.next_u64();
    EXPECT_EQ(x, b.next_u64());
    differs = differs || x != c.next_u64();
  }
  EXPECT_TRUE(differs);
  EXPECT_EQ(RngStream::kAlgorithm, "mt19937_64");
}

TEST(Rng, MatchesReferenceEngine) {
  // The documented generator: the standard 64-bit Mersenne Twister.
  std::mt19937_64 ref(7);
  RngStream r(7);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(r.next_u64(), ref());
}

TEST(Rng, UniformRanges) {
  RngStream r(1);
  std::vector<int> hist(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const double u = r.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    const auto k = r.uniform_below(7);
    ASSERT_LT(k, 7u);
    ++hist[k];
  }
  for (int h : hist) EXPECT_NEAR(h, 10000, 500);
  EXPECT_EQ(r.uniform_below(1), 0u);
}

TEST(Rng, DeriveSeedSpreads) {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t i = 0; i < 1000; ++i) seeds.insert(derive_seed(5, i));
  EXPECT_EQ(seeds.size(), 1000u);
  EXPECT_EQ(derive_seed(5, 3), derive_seed(5, 3));
  EXPECT_NE(derive_seed(5, 3), derive_seed(6, 3));
}

}  // namespace
}  // namespace gcover
