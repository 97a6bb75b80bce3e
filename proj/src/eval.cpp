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

#include "fstag/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>

#include "fstag/errors.hpp"

namespace fstag {

EvalReport evaluate(const std::vector<SentenceLattice>& system,
                    const std::vector<std::vector<Tag>>& gold,
                    const TagInventory& inv) {
  if (system.size() != gold.size())
    throw DataError("alignment mismatch: " + std::to_string(system.size()) +
                    " system sentences vs " + std::to_string(gold.size()) +
                    " gold sentences");
  EvalReport report;
  for (std::size_t s = 0; s < system.size(); ++s) {
    const SentenceLattice& lattice = system[s];
    if (lattice.size() != gold[s].size())
      throw DataError("alignment mismatch at sentence " + std::to_string(s + 1) +
                      ": " + std::to_string(lattice.size()) +
                      " system words vs " + std::to_string(gold[s].size()) +
                      " gold words");
    for (std::size_t w = 0; w < lattice.size(); ++w) {
      const Cohort& cohort = lattice.cohorts[w];
      ++report.words;
      report.tags_per_word += static_cast<double>(cohort.readings.size());
      if (cohort.readings.size() > 1) report.remaining_ambiguity += 1.0;
      Tag want = inv.normalize(gold[s][w]);
      bool hit = false;
      for (Tag t : cohort.readings) {
        if (inv.normalize(t) == want) {
          hit = true;
          break;
        }
      }
      if (!hit) ++report.errors;
    }
  }
  if (report.words > 0) {
    report.tags_per_word /= static_cast<double>(report.words);
    report.remaining_ambiguity /= static_cast<double>(report.words);
    report.error_rate =
        static_cast<double>(report.errors) / static_cast<double>(report.words);
  } else {
    report.tags_per_word = 1.0;
  }
  report.correctness = 1.0 - report.error_rate;
  return report;
}

std::vector<std::vector<Tag>> read_gold(std::istream& in,
                                        const TagInventory& inv) {
  std::vector<SentenceLattice> lattices = read_lattices(in, inv);
  std::vector<std::vector<Tag>> gold;
  gold.reserve(lattices.size());
  for (const SentenceLattice& lattice : lattices) {
    std::vector<Tag> tags;
    for (const Cohort& c : lattice.cohorts) {
      if (c.readings.size() != 1)
        throw DataError("gold entry \"" + c.token.surface +
                        "\" must have exactly one tag");
      tags.push_back(c.readings.front());
    }
    gold.push_back(std::move(tags));
  }
  return gold;
}

void write_report(std::ostream& out, const EvalReport& report,
                  const std::string& label) {
  char line[160];
  out << "                error rate (correctness)  remaining ambiguity  "
         "tag / word\n";
  std::snprintf(line, sizeof line, "%-15s %.2f %% (%.2f %%)%*s%.2f %%%*s%.2f\n",
                label.c_str(), report.error_rate * 100.0,
                report.correctness * 100.0, 9, "",
                report.remaining_ambiguity * 100.0, 15, "",
                report.tags_per_word);
  out << line;
  out << "words=" << report.words << "\n";
  out << "errors=" << report.errors << "\n";
  std::snprintf(line, sizeof line, "error_rate=%.6f\n", report.error_rate);
  out << line;
  std::snprintf(line, sizeof line, "correctness=%.6f\n", report.correctness);
  out << line;
  std::snprintf(line, sizeof line, "remaining_ambiguity=%.6f\n",
                report.remaining_ambiguity);
  out << line;
  std::snprintf(line, sizeof line, "tags_per_word=%.6f\n",
                report.tags_per_word);
  out << line;
}

AmbiguityProfile ambiguity_profile(const std::vector<Token>& corpus,
                                   const Lexicon& lexicon,
                                   const Guesser& guesser) {
  std::map<std::string, std::size_t> counts;
  std::size_t total = 0;
  for (const Token& token : corpus) {
    Cohort cohort = analyze(lexicon, guesser, token);
    if (cohort.readings.size() > 1) {
      ++counts[token.surface];
      ++total;
    }
  }
  AmbiguityProfile profile;
  for (const auto& [surface, count] : counts)
    profile.push_back({surface, count, 0.0});
  std::sort(profile.begin(), profile.end(),
            [](const AmbiguityProfileEntry& a, const AmbiguityProfileEntry& b) {
              if (a.count != b.count) return a.count > b.count;
              return a.surface < b.surface;
            });
  std::size_t running = 0;
  for (AmbiguityProfileEntry& entry : profile) {
    running += entry.count;
    entry.cumulative =
        static_cast<double>(running) / static_cast<double>(total);
  }
  return profile;
}

void write_profile(std::ostream& out, const AmbiguityProfile& profile) {
  char line[64];
  for (const AmbiguityProfileEntry& entry : profile) {
    std::snprintf(line, sizeof line, "\t%zu\t%.4f\n", entry.count,
                  entry.cumulative);
    out << entry.surface << line;
  }
}

}  // namespace fstag
