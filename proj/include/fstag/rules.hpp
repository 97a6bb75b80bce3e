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

// The constraint-based disambiguator: a rule DSL in three tiers
// (reliable contextual rules, heuristics, a final preference ranking),
// applied in sequence to reduce reading sets.  Non-final rules never
// empty a cohort; the final ranking always leaves exactly one reading.
//
// Rule file syntax (see data/rules.fr.dsl for a worked pack):
//
//   RELIABLE | HEURISTIC | FINAL          section headers
//   RULE <name> [tier] SELECT|REMOVE {TAGS} [ON WORD {w ...} [FOLD]]
//        [IF <cond> AND <cond> ...]
//   <cond> ::= [NOT] ( <pos> <test> [BARRIER {TAGS}] [ONLY] )
//   <pos>  ::= -2 | -1 | 0 | 1 | ...      fixed offset from the target
//            | *-1 | *1 | *-2 | ...       scan outward from that offset
//   <test> ::= TAG {TAGS} | WORD {w ...} [FOLD] | BOS | EOS
//   PREFER [WORD {w ...}] TAG > TAG > ...
//
// ONLY requires the tested cohort to be unambiguous.  A BARRIER stops a
// scan when any of its tags is present.  PREFER fragments concatenate,
// skipping tags already ranked.

#ifndef FSTAG_RULES_HPP
#define FSTAG_RULES_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "fstag/lattice.hpp"
#include "fstag/tagset.hpp"

namespace fstag {

enum class RuleTier { Reliable, Heuristic };
enum class RuleAction { Select, Remove };

struct Condition {
  enum class Test { Tags, Words, Bos, Eos };
  int position = 0;   // for scans: the start offset, sign gives direction
  bool scan = false;
  Test test = Test::Tags;
  TagSet tags;
  std::vector<std::string> words;  // stored folded when fold is set
  bool fold = false;
  bool only_reading = false;
  TagSet barrier;
  bool negated = false;
};

struct Rule {
  std::string name;
  RuleTier tier = RuleTier::Reliable;
  RuleAction action = RuleAction::Select;
  TagSet target;  // non-empty
  std::vector<std::string> target_words;  // empty = any surface
  bool target_fold = false;
  std::vector<Condition> conditions;  // conjunctive; empty = always
};

// Most-preferred-first tag order.  Tags not listed rank below all
// listed ones, in inventory order.
struct PreferenceRanking {
  std::vector<Tag> order;

  bool empty() const { return order.empty(); }
  std::size_t rank(Tag t) const;
  void append(Tag t);  // no-op if already ranked
};

struct FinalPreference {
  PreferenceRanking ranking;
  // Word-specific rankings, keyed by folded surface, consulted first.
  std::vector<std::pair<std::string, PreferenceRanking>> word_rankings;

  const PreferenceRanking* find_word_ranking(const std::string& folded) const;
};

struct RulePack {
  std::vector<Rule> reliable;
  std::vector<Rule> heuristic;
  FinalPreference final_preference;
};

// Parses a rule file.  Throws ParseError (line/column) on syntax errors,
// unknown tags, empty targets and duplicate rule names.
RulePack parse_rules(std::istream& in, const TagInventory& inv);

// Applies one rule everywhere it matches, left to right; conditions see
// the partially updated lattice.  Per cohort the output readings are a
// subset of the input readings, and never empty.
SentenceLattice apply_rule(const Rule& rule, const SentenceLattice& lattice);

enum class TierLimit { Reliable = 1, Heuristic = 2, Final = 3 };

// Runs the reliable tier to a fixpoint, then (tier permitting) the
// heuristic tier likewise, then the final preference ranking.
SentenceLattice apply_tiers(const RulePack& pack,
                            const SentenceLattice& lattice, TierLimit limit);

// Forces every cohort down to its single preferred reading.
SentenceLattice apply_final_preference(const FinalPreference& pref,
                                       const SentenceLattice& lattice);

}  // namespace fstag

#endif  // FSTAG_RULES_HPP
