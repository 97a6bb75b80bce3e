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

// The sentence lattice every engine consumes and reduces: ordered
// cohorts with implicit BOS/EOS boundaries.  Engines produce new
// lattices; a cohort's reading set never goes empty.

#ifndef FSTAG_LATTICE_HPP
#define FSTAG_LATTICE_HPP

#include <iosfwd>
#include <vector>

#include "fstag/morphology.hpp"

namespace fstag {

struct SentenceLattice {
  std::vector<Cohort> cohorts;

  std::size_t size() const { return cohorts.size(); }
  const Cohort& at(std::size_t i) const { return cohorts.at(i); }
};

// Validating constructor: rejects empty sentences and empty reading sets.
SentenceLattice build_lattice(std::vector<Cohort> cohorts);

struct AmbiguityStats {
  std::size_t words = 0;
  std::size_t ambiguous_words = 0;  // |readings| > 1
  std::size_t total_readings = 0;
  double tags_per_word = 0.0;       // total_readings / words
  double percent_ambiguous = 0.0;   // ambiguous_words / words, in [0,1]
};

AmbiguityStats ambiguity_stats(const SentenceLattice& lattice);

// Corpus-level counting: merges the per-sentence counts.
AmbiguityStats ambiguity_stats(const std::vector<SentenceLattice>& corpus);

// Text format, also used for gold files: one `surface<TAB>tag1 tag2 ...`
// line per cohort, a blank line between sentences.
void write_lattice(std::ostream& out, const SentenceLattice& lattice,
                   const TagInventory& inv);
std::vector<SentenceLattice> read_lattices(std::istream& in,
                                           const TagInventory& inv);

}  // namespace fstag

#endif  // FSTAG_LATTICE_HPP
