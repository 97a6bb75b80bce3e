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

// Morphological lookup: lexicon first, then the productive-endings
// guesser for out-of-lexicon words.  Every token gets a non-empty
// ambiguity class.

#ifndef FSTAG_MORPHOLOGY_HPP
#define FSTAG_MORPHOLOGY_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fstag/tagset.hpp"
#include "fstag/tokenizer.hpp"

namespace fstag {

struct LexiconEntry {
  TagSet tags;
  std::map<Tag, std::string> lemmas;  // optional, keyed by tag
};

class Lexicon {
 public:
  explicit Lexicon(const TagInventory& inv) : inv_(&inv) {}

  // File format: `surface<TAB>tag[:lemma] ...`, `#` comments.  Duplicate
  // surface lines merge their tag sets.  Throws ParseError with the line
  // number on malformed lines and unknown tags.
  static Lexicon load(std::istream& in, const TagInventory& inv);

  void add(std::string_view surface, const TagSet& tags);
  const LexiconEntry* find(std::string_view surface) const;
  std::size_t size() const { return entries_.size(); }
  const TagInventory& inventory() const { return *inv_; }

 private:
  const TagInventory* inv_;
  std::unordered_map<std::string, LexiconEntry> entries_;
};

// Suffix-driven guesser.  The longest matching ending wins; with no
// match, capitalized words get the proper-name class and everything
// else the broad open-class default.
class Guesser {
 public:
  struct EndingRule {
    std::string suffix;
    TagSet tags;
  };

  Guesser(std::vector<EndingRule> endings, TagSet default_class,
          TagSet capitalized_class, const TagInventory& inv);

  // File format: `suffix<TAB>tags`, plus the reserved lines
  // `DEFAULT<TAB>tags` and `CAPITALIZED<TAB>tags`.
  static Guesser load(std::istream& in, const TagInventory& inv);

  TagSet guess(std::string_view surface) const;
  const TagInventory& inventory() const { return *inv_; }

 private:
  const TagInventory* inv_;
  std::vector<EndingRule> endings_;
  TagSet default_class_;
  TagSet capitalized_class_;
};

enum class ReadingSource { Lexicon, Guesser, Hint };

std::string_view to_string(ReadingSource source);

// A token plus its surviving candidate readings; never empty.
struct Cohort {
  Token token;
  TagSet readings;
  ReadingSource source = ReadingSource::Lexicon;
};

// Classified tokens (NUM, HEURE, CM, PUNCT) map straight to their tag.
// Words try the lexicon (exact form first, then the lowercased form to
// catch sentence-initial capitals) and fall back to the guesser.
Cohort analyze(const Lexicon& lexicon, const Guesser& guesser,
               const Token& token);

}  // namespace fstag

#endif  // FSTAG_MORPHOLOGY_HPP
