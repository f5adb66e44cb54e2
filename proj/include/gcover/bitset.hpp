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

#ifndef GCOVER_BITSET_HPP_
#define GCOVER_BITSET_HPP_

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gcover {

// Fixed-length bit vector used as the characteristic vector of a subset of
// the ground set. Bit i corresponds to element i. Unused high bits of the
// last word are always zero, so word-wise comparison and hashing are exact.
class BitSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitSet() = default;
  explicit BitSet(std::size_t size)
      : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  static BitSet from_indices(std::size_t size,
                             std::span<const std::size_t> indices) {
    BitSet out(size);
    for (std::size_t i : indices) out.set(i);
    return out;
  }
  static BitSet from_indices(std::size_t size,
                             std::initializer_list<std::size_t> indices) {
    BitSet out(size);
    for (std::size_t i : indices) out.set(i);
    return out;
  }
  // Low `size` bits of `mask`; size must be <= 64.
  static BitSet from_mask(std::size_t size, std::uint64_t mask) {
    assert(size <= kWordBits);
    BitSet out(size);
    if (size > 0) out.words_[0] = mask & low_mask(size);
    return out;
  }
  static BitSet full(std::size_t size) {
    BitSet out(size);
    out.set_all();
    return out;
  }

  std::size_t size() const { return size_; }
  bool empty_set() const {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }

  bool test(std::size_t i) const {
    assert(i < size_);
    return (words_[i / kWordBits] >> (i % kWordBits)) & Word{1};
  }
  bool operator[](std::size_t i) const { return test(i); }

  void set(std::size_t i, bool value = true) {
    assert(i < size_);
    const Word bit = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= bit;
    } else {
      words_[i / kWordBits] &= ~bit;
    }
  }
  void reset(std::size_t i) { set(i, false); }
  void flip(std::size_t i) {
    assert(i < size_);
    words_[i / kWordBits] ^= Word{1} << (i % kWordBits);
  }
  void set_all() {
    for (Word& w : words_) w = ~Word{0};
    trim();
  }
  void clear() {
    for (Word& w : words_) w = 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  BitSet& operator|=(const BitSet& other) {
    assert(size_ == other.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }
  BitSet& operator&=(const BitSet& other) {
    assert(size_ == other.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }
  // this \ other
  BitSet& subtract(const BitSet& other) {
    assert(size_ == other.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
    return *this;
  }
  friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
  friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }

  bool is_subset_of(const BitSet& other) const {
    assert(size_ == other.size_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }
  bool intersects(const BitSet& other) const {
    assert(size_ == other.size_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & other.words_[k]) return true;
    return false;
  }
  // |this \ other|
  std::size_t count_minus(const BitSet& other) const {
    assert(size_ == other.size_);
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k)
      c += static_cast<std::size_t>(std::popcount(words_[k] & ~other.words_[k]));
    return c;
  }

  // Calls fn(i) for every set bit in increasing index order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      Word w = words_[k];
      while (w != 0) {
        const int b = std::countr_zero(w);
        fn(k * kWordBits + static_cast<std::size_t>(b));
        w &= w - 1;
      }
    }
  }
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::span<const Word> words() const { return words_; }

  // Bits as '0'/'1' characters, element 0 first.
  std::string to_string() const {
    std::string s(size_, '0');
    for_each([&](std::size_t i) { s[i] = '1'; });
    return s;
  }

  std::size_t hash() const {
    // FNV-1a over the words, mixed with the size.
    std::uint64_t h = 1469598103934665603ULL ^ size_;
    for (Word w : words_) {
      h ^= w;
      h *= 1099511628211ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }

  friend bool operator==(const BitSet& a, const BitSet& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  static Word low_mask(std::size_t bits) {
    return bits >= kWordBits ? ~Word{0} : ((Word{1} << bits) - 1);
  }
  void trim() {
    if (words_.empty()) return;
    const std::size_t tail = size_ % kWordBits;
    if (tail != 0) words_.back() &= low_mask(tail);
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

struct BitSetHash {
  std::size_t operator()(const BitSet& b) const { return b.hash(); }
};

// Lexicographic order on the sorted member-index lists ({0,2} < {1}).
inline bool lex_less(const BitSet& a, const BitSet& b) {
  const auto ia = a.indices();
  const auto ib = b.indices();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

}  // namespace gcover

#endif  // GCOVER_BITSET_HPP_
