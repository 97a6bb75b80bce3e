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

// The hybrid tagger: contextual rules filter, the HMM picks among the
// survivors, the final preference ranking resolves whatever is left.

#ifndef FSTAG_COMBINER_HPP
#define FSTAG_COMBINER_HPP

#include <vector>

#include "fstag/hmm.hpp"
#include "fstag/lattice.hpp"
#include "fstag/rules.hpp"

namespace fstag {

struct CombinerOptions {
  // Run the HMM on the rule-reduced lattice instead of the original one.
  // Experimental; the reduced reading sets must then be classes the
  // model knows.
  bool hmm_on_reduced = false;
};

// Step 1: reliable + heuristic rules.  Step 2: Viterbi on the original
// lattice; a cohort adopts the HMM's tag iff it survived step 1.
// Step 3: final preference on the cohorts still ambiguous.  The result
// is total and always lies within the step-1 surviving readings.
std::vector<Tag> tag_combined(const RulePack& pack, const HmmModel& model,
                              const SentenceLattice& lattice,
                              const CombinerOptions& options = CombinerOptions());

}  // namespace fstag

#endif  // FSTAG_COMBINER_HPP
