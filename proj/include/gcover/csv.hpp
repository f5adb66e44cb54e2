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

#ifndef GCOVER_CSV_HPP_
#define GCOVER_CSV_HPP_

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "gcover/bintrack.hpp"
#include "gcover/gsemo.hpp"
#include "gcover/problems/io.hpp"

namespace gcover {

// Quotes a field when it contains a comma, quote, CR or LF; inner quotes are
// doubled.
inline std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// A table of string cells, written either as CSV or as space-aligned text.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<std::string> row) {
    row.resize(header_.size());
    rows_.push_back(std::move(row));
  }

  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

  void write_csv(std::ostream& out) const {
    write_csv_row(out, header_);
    for (const auto& r : rows_) write_csv_row(out, r);
  }

  void write_text(std::ostream& out) const {
    std::vector<std::size_t> width(header_.size());
    for (std::size_t c = 0; c < header_.size(); ++c) {
      width[c] = header_[c].size();
      for (const auto& r : rows_) width[c] = std::max(width[c], r[c].size());
    }
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (c > 0) out << "  ";
        out << r[c];
        if (c + 1 < r.size()) out << std::string(width[c] - r[c].size(), ' ');
      }
      out << '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
  }

 private:
  static void write_csv_row(std::ostream& out, const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c > 0) out << ',';
      out << csv_escape(r[c]);
    }
    out << '\n';
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// iteration,parent,flipped,f1,f2,level,inserted,evicted,archive_size
inline Table run_trace_table(const RunTrace& trace) {
  Table t({"iteration", "parent", "flipped", "f1", "f2", "level", "inserted", "evicted",
           "archive_size"});
  for (const auto& r : trace.records) {
    t.add_row({std::to_string(r.iteration), std::to_string(r.parent),
               std::to_string(r.flipped), format_double(r.offspring.f1()),
               format_double(r.offspring.f2()), std::to_string(r.offspring.level()),
               r.inserted ? "1" : "0", std::to_string(r.evicted),
               std::to_string(r.archive_size)});
  }
  return t;
}

// iteration,kind,bin,f1,f2,tracker,phase
inline Table track_event_table(const std::vector<TrackEvent>& events) {
  Table t({"iteration", "kind", "bin", "f1", "f2", "tracker", "phase"});
  for (const auto& e : events) {
    t.add_row({std::to_string(e.iteration), std::string(to_string(e.kind)),
               std::to_string(e.bin), format_double(e.point.f1()),
               format_double(e.point.f2()), std::to_string(e.tracker),
               std::to_string(static_cast<int>(e.phase))});
  }
  return t;
}

}  // namespace gcover

#endif  // GCOVER_CSV_HPP_
