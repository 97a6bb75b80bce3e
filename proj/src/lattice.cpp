// Copyright 2026 The fstag authors
//
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

#include "fstag/lattice.hpp"

#include <istream>
#include <ostream>

#include "fstag/errors.hpp"

namespace fstag {

SentenceLattice build_lattice(std::vector<Cohort> cohorts) {
  if (cohorts.empty()) throw DataError("empty sentence");
  for (const Cohort& c : cohorts)
    if (c.readings.empty())
      throw DataError("cohort \"" + c.token.surface + "\" has no readings");
  return SentenceLattice{std::move(cohorts)};
}

AmbiguityStats ambiguity_stats(const SentenceLattice& lattice) {
  AmbiguityStats stats;
  for (const Cohort& c : lattice.cohorts) {
    ++stats.words;
    stats.total_readings += c.readings.size();
    if (c.readings.size() > 1) ++stats.ambiguous_words;
  }
  if (stats.words > 0) {
    stats.tags_per_word =
        static_cast<double>(stats.total_readings) / stats.words;
    stats.percent_ambiguous =
        static_cast<double>(stats.ambiguous_words) / stats.words;
  }
  return stats;
}

AmbiguityStats ambiguity_stats(const std::vector<SentenceLattice>& corpus) {
  AmbiguityStats stats;
  for (const SentenceLattice& lattice : corpus) {
    for (const Cohort& c : lattice.cohorts) {
      ++stats.words;
      stats.total_readings += c.readings.size();
      if (c.readings.size() > 1) ++stats.ambiguous_words;
    }
  }
  if (stats.words > 0) {
    stats.tags_per_word =
        static_cast<double>(stats.total_readings) / stats.words;
    stats.percent_ambiguous =
        static_cast<double>(stats.ambiguous_words) / stats.words;
  }
  return stats;
}

void write_lattice(std::ostream& out, const SentenceLattice& lattice,
                   const TagInventory& inv) {
  for (const Cohort& c : lattice.cohorts)
    out << c.token.surface << '\t' << inv.to_string(c.readings) << '\n';
}

std::vector<SentenceLattice> read_lattices(std::istream& in,
                                           const TagInventory& inv) {
  std::vector<SentenceLattice> out;
  std::vector<Cohort> current;
  std::string line;
  std::size_t lineno = 0;
  std::size_t offset = 0;
  auto flush = [&] {
    if (!current.empty()) {
      out.push_back(build_lattice(std::move(current)));
      current.clear();
    }
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0)
      throw ParseError("expected `surface<TAB>tags`", lineno);
    Cohort c;
    c.token.surface = line.substr(0, tab);
    c.token.begin = offset;
    c.token.end = offset + c.token.surface.size();
    offset = c.token.end + 1;
    std::string rest = line.substr(tab + 1);
    std::size_t i = 0;
    while (i < rest.size()) {
      while (i < rest.size() && (rest[i] == ' ' || rest[i] == '\t')) ++i;
      std::size_t start = i;
      while (i < rest.size() && rest[i] != ' ' && rest[i] != '\t') ++i;
      if (i > start) {
        try {
          c.readings.insert(inv.parse(rest.substr(start, i - start)));
        } catch (const DataError& e) {
          throw ParseError(e.what(), lineno);
        }
      }
    }
    if (c.readings.empty()) throw ParseError("cohort without tags", lineno);
    current.push_back(std::move(c));
  }
  flush();
  return out;
}

}  // namespace fstag
