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

// Plain-text instance formats. Tokens are whitespace separated, ids are
// 1-indexed, and '#' starts a comment that runs to the end of the line.
//
//   set system:        m_e m_s / m_s x "cost k e_1 ... e_k"
//   graph:             n m / m x "u v"
//   weighted coverage: m_items m_sets / m_items x "value" /
//                      m_sets x "cost k i_1 ... i_k"

#ifndef GCOVER_PROBLEMS_IO_HPP_
#define GCOVER_PROBLEMS_IO_HPP_

#include <charconv>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "gcover/errors.hpp"
#include "gcover/problems/graph.hpp"
#include "gcover/problems/set_cover.hpp"
#include "gcover/problems/weighted_coverage.hpp"

namespace gcover {

// Shortest decimal text that parses back to exactly `x`.
inline std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) return std::to_string(x);
  return std::string(buf, end);
}

namespace detail {

class TokenReader {
 public:
  explicit TokenReader(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      std::istringstream words(line);
      std::string w;
      while (words >> w) tokens_.emplace_back(std::move(w), line_no);
    }
  }

  bool done() const { return pos_ == tokens_.size(); }

  std::size_t next_count(std::string_view what) {
    const auto& [tok, line] = take(what);
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || end != tok.data() + tok.size())
      fail(what, tok, line, "a nonnegative integer");
    return value;
  }

  // 1-indexed id in [1, limit], returned 0-based.
  std::size_t next_id(std::string_view what, std::size_t limit) {
    const std::size_t line = peek_line();
    const std::size_t id = next_count(what);
    if (id < 1 || id > limit)
      throw ParseError("line " + std::to_string(line) + ": " + std::string(what) + " " +
                       std::to_string(id) + " outside 1.." + std::to_string(limit));
    return id - 1;
  }

  double next_real(std::string_view what) {
    const auto& [tok, line] = take(what);
    double value = 0.0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || end != tok.data() + tok.size())
      fail(what, tok, line, "a number");
    return value;
  }

  void expect_end() {
    if (!done())
      throw ParseError("line " + std::to_string(tokens_[pos_].second) +
                       ": unexpected trailing token '" + tokens_[pos_].first + "'");
  }

 private:
  const std::pair<std::string, std::size_t>& take(std::string_view what) {
    if (done()) throw ParseError("unexpected end of input while reading " + std::string(what));
    return tokens_[pos_++];
  }
  std::size_t peek_line() const { return done() ? 0 : tokens_[pos_].second; }
  [[noreturn]] static void fail(std::string_view what, const std::string& tok,
                                std::size_t line, std::string_view expected) {
    throw ParseError("line " + std::to_string(line) + ": " + std::string(what) + " '" + tok +
                     "' is not " + std::string(expected));
  }

  std::vector<std::pair<std::string, std::size_t>> tokens_;
  std::size_t pos_ = 0;
};

inline WeightedSubset read_subset(TokenReader& r, std::size_t limit, std::string_view id_kind) {
  WeightedSubset s;
  s.cost = r.next_real("set cost");
  if (!(s.cost > 0.0)) throw ParseError("set cost must be positive");
  const std::size_t k = r.next_count("set size");
  s.members.reserve(k);
  for (std::size_t j = 0; j < k; ++j) s.members.push_back(r.next_id(id_kind, limit));
  return s;
}

inline void write_subset(std::ostream& out, const WeightedSubset& s) {
  out << format_double(s.cost) << ' ' << s.members.size();
  for (std::size_t e : s.members) out << ' ' << e + 1;
  out << '\n';
}

}  // namespace detail

// Throws ParseError on malformed input and UncoverableInstance when the sets
// do not cover the universe.
inline SetSystemInstance read_set_system(std::istream& in, std::string name = "setcover") {
  detail::TokenReader r(in);
  SetSystemInstance inst;
  inst.name = std::move(name);
  inst.universe = r.next_count("element count");
  const std::size_t m = r.next_count("set count");
  inst.sets.reserve(m);
  for (std::size_t s = 0; s < m; ++s)
    inst.sets.push_back(detail::read_subset(r, inst.universe, "element id"));
  r.expect_end();
  validate(inst);
  return inst;
}

inline void write_set_system(std::ostream& out, const SetSystemInstance& inst) {
  out << inst.universe << ' ' << inst.sets.size() << '\n';
  for (const auto& s : inst.sets) detail::write_subset(out, s);
}

inline Graph read_graph(std::istream& in) {
  detail::TokenReader r(in);
  const std::size_t n = r.next_count("vertex count");
  const std::size_t m = r.next_count("edge count");
  Graph g(n);
  for (std::size_t e = 0; e < m; ++e) {
    const std::size_t u = r.next_id("vertex", n);
    const std::size_t v = r.next_id("vertex", n);
    try {
      g.add_edge(u, v);
    } catch (const InvalidArgument& err) {
      throw ParseError(std::string("graph is not simple: ") + err.what());
    }
  }
  r.expect_end();
  return g;
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

inline WeightedCoverageInstance read_weighted_coverage(std::istream& in,
                                                       std::string name = "wcoverage") {
  detail::TokenReader r(in);
  WeightedCoverageInstance inst;
  inst.name = std::move(name);
  const std::size_t items = r.next_count("item count");
  const std::size_t sets = r.next_count("set count");
  inst.item_values.reserve(items);
  for (std::size_t i = 0; i < items; ++i) {
    const double v = r.next_real("item value");
    if (!(v > 0.0)) throw ParseError("item values must be positive");
    inst.item_values.push_back(v);
  }
  for (std::size_t s = 0; s < sets; ++s)
    inst.sets.push_back(detail::read_subset(r, items, "item id"));
  r.expect_end();
  validate(inst);
  return inst;
}

inline void write_weighted_coverage(std::ostream& out, const WeightedCoverageInstance& inst) {
  out << inst.item_values.size() << ' ' << inst.sets.size() << '\n';
  for (double v : inst.item_values) out << format_double(v) << '\n';
  for (const auto& s : inst.sets) detail::write_subset(out, s);
}

}  // namespace gcover

#endif  // GCOVER_PROBLEMS_IO_HPP_
