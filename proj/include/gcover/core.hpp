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

// Individuals, bi-objective dominance and the Pareto archive update used by
// GSEMO. Both objectives are minimized: f1 is the quantized uncovered
// utility, f2 the total weight.

#ifndef GCOVER_CORE_HPP_
#define GCOVER_CORE_HPP_

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "gcover/bitset.hpp"
#include "gcover/rng.hpp"

namespace gcover {

template <class T>
concept BiObjective = requires(const T& t) {
  { t.f1() } -> std::convertible_to<double>;
  { t.f2() } -> std::convertible_to<double>;
};

// A bare (f1, f2) pair together with the integer level f1 / delta.
class FitnessPoint {
 public:
  FitnessPoint() = default;
  FitnessPoint(double f1, double f2, std::int64_t level = 0)
      : f1_(f1), f2_(f2), level_(level) {}

  double f1() const { return f1_; }
  double f2() const { return f2_; }
  std::int64_t level() const { return level_; }

  friend bool operator==(const FitnessPoint&, const FitnessPoint&) = default;

 private:
  double f1_ = 0.0;
  double f2_ = 0.0;
  std::int64_t level_ = 0;
};

// A subset of the ground set with its cached fitness. Only a CoverProblem
// evaluation should construct one with a non-trivial fitness.
class Individual {
 public:
  Individual() = default;
  Individual(BitSet bits, FitnessPoint fitness)
      : bits_(std::move(bits)), fitness_(fitness) {}

  const BitSet& bits() const { return bits_; }
  const FitnessPoint& fitness() const { return fitness_; }
  double f1() const { return fitness_.f1(); }
  double f2() const { return fitness_.f2(); }
  std::int64_t level() const { return fitness_.level(); }

  friend bool operator==(const Individual&, const Individual&) = default;

 private:
  BitSet bits_;
  FitnessPoint fitness_;
};

// a weakly dominates b: no worse in both objectives.
template <BiObjective A, BiObjective B>
bool weakly_dominates(const A& a, const B& b) {
  return a.f1() <= b.f1() && a.f2() <= b.f2();
}

// a dominates b: weakly dominates and strictly better in one objective.
template <BiObjective A, BiObjective B>
bool dominates(const A& a, const B& b) {
  return weakly_dominates(a, b) && (a.f1() < b.f1() || a.f2() < b.f2());
}

struct InsertOutcome {
  bool inserted = false;
  std::size_t evicted = 0;
};

// Population of mutually incomparable individuals. Members are kept sorted by
// increasing f1 (hence strictly decreasing f2), which makes index-based
// uniform selection well defined and replayable.
template <BiObjective T>
class ParetoArchive {
 public:
  using value_type = T;
  using const_iterator = typename std::vector<T>::const_iterator;

  ParetoArchive() = default;

  // Rejects `candidate` if some member strictly dominates it. Otherwise
  // removes every member it weakly dominates (equal fitness included) and
  // adds it. Removed members are appended to `evicted` when given.
  InsertOutcome insert(T candidate, std::vector<T>* evicted = nullptr) {
    for (const T& z : members_) {
      if (dominates(z, candidate)) return {};
    }
    InsertOutcome outcome{true, 0};
    std::vector<T> kept;
    kept.reserve(members_.size() + 1);
    for (T& z : members_) {
      if (weakly_dominates(candidate, z)) {
        ++outcome.evicted;
        if (evicted != nullptr) evicted->push_back(std::move(z));
      } else {
        kept.push_back(std::move(z));
      }
    }
    auto pos = std::lower_bound(
        kept.begin(), kept.end(), candidate.f1(),
        [](const T& m, double f1) { return m.f1() < f1; });
    kept.insert(pos, std::move(candidate));
    members_ = std::move(kept);
    return outcome;
  }

  // Member that strictly dominates `x` with the smallest f1 (ties: smallest
  // f2), or nullptr.
  template <BiObjective U>
  const T* strongest_dominator(const U& x) const {
    const T* best = nullptr;
    for (const T& z : members_) {
      if (!dominates(z, x)) continue;
      if (best == nullptr || z.f1() < best->f1() ||
          (z.f1() == best->f1() && z.f2() < best->f2())) {
        best = &z;
      }
    }
    return best;
  }

  // Member whose f1 equals `f1`, or nullptr.
  const T* find_f1(double f1) const {
    auto pos = std::lower_bound(
        members_.begin(), members_.end(), f1,
        [](const T& m, double v) { return m.f1() < v; });
    if (pos != members_.end() && pos->f1() == f1) return &*pos;
    return nullptr;
  }

  bool mutually_incomparable() const {
    for (std::size_t i = 0; i < members_.size(); ++i)
      for (std::size_t j = 0; j < members_.size(); ++j)
        if (i != j && weakly_dominates(members_[i], members_[j])) return false;
    return true;
  }

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const T& operator[](std::size_t i) const { return members_[i]; }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }
  const std::vector<T>& members() const { return members_; }

 private:
  std::vector<T> members_;
};

// Standard bit-wise mutation: each bit flips independently with probability
// 1/n. Exactly one uniform draw is consumed per bit, in index order.
inline BitSet flip_mutation(const BitSet& parent, RngStream& rng) {
  BitSet child = parent;
  const std::size_t n = parent.size();
  if (n == 0) return child;
  const double rate = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.uniform01() < rate) child.flip(i);
  }
  return child;
}

}  // namespace gcover

#endif  // GCOVER_CORE_HPP_
