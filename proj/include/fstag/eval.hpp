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

// Evaluation harness: error rate / remaining ambiguity / tags per word
// against a hand-tagged gold corpus, and the ambiguous-word frequency
// profile.

#ifndef FSTAG_EVAL_HPP
#define FSTAG_EVAL_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "fstag/lattice.hpp"
#include "fstag/morphology.hpp"

namespace fstag {

struct EvalReport {
  std::size_t words = 0;
  std::size_t errors = 0;
  double error_rate = 0.0;
  double correctness = 1.0;          // always exactly 1 - error_rate
  double remaining_ambiguity = 0.0;  // share of words with >1 reading
  double tags_per_word = 1.0;
};

// A word counts as an error iff the gold tag is not among the cohort's
// surviving readings; comparison is on normalized (base) tags, so
// word-specific variants match their base.  The system may still be
// partially ambiguous.  Throws DataError on any alignment mismatch,
// naming the sentence/word position.
EvalReport evaluate(const std::vector<SentenceLattice>& system,
                    const std::vector<std::vector<Tag>>& gold,
                    const TagInventory& inv);

// Gold files use the lattice text format with exactly one tag per line.
std::vector<std::vector<Tag>> read_gold(std::istream& in,
                                        const TagInventory& inv);

// Figure-style table plus machine-readable key=value lines.
void write_report(std::ostream& out, const EvalReport& report,
                  const std::string& label);

struct AmbiguityProfileEntry {
  std::string surface;
  std::size_t count = 0;     // ambiguous occurrences of this exact form
  double cumulative = 0.0;   // running share of all ambiguous tokens
};

using AmbiguityProfile = std::vector<AmbiguityProfileEntry>;

// Ranks surface forms (case-sensitively) by how many ambiguous tokens
// they account for; ties break lexicographically.  Empty when nothing
// is ambiguous.
AmbiguityProfile ambiguity_profile(const std::vector<Token>& corpus,
                                   const Lexicon& lexicon,
                                   const Guesser& guesser);

void write_profile(std::ostream& out, const AmbiguityProfile& profile);

}  // namespace fstag

#endif  // FSTAG_EVAL_HPP
