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

#include "fstag/combiner.hpp"

namespace fstag {

std::vector<Tag> tag_combined(const RulePack& pack, const HmmModel& model,
                              const SentenceLattice& lattice,
                              const CombinerOptions& options) {
  SentenceLattice reduced = apply_tiers(pack, lattice, TierLimit::Heuristic);
  std::vector<Tag> hmm_tags =
      decode(model, options.hmm_on_reduced ? reduced : lattice);

  for (std::size_t i = 0; i < reduced.size(); ++i) {
    Cohort& cohort = reduced.cohorts[i];
    if (cohort.readings.size() > 1 && cohort.readings.contains(hmm_tags[i]))
      cohort.readings = TagSet{hmm_tags[i]};
  }

  SentenceLattice final_lattice =
      apply_final_preference(pack.final_preference, reduced);
  std::vector<Tag> out;
  out.reserve(final_lattice.size());
  for (const Cohort& cohort : final_lattice.cohorts)
    out.push_back(cohort.readings.front());
  return out;
}

}  // namespace fstag
