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

#include "fstag/morphology.hpp"

#include <istream>
#include <sstream>

#include "fstag/errors.hpp"
#include "fstag/utf8.hpp"

namespace fstag {

namespace {

std::string strip_comment(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::size_t hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  while (!line.empty() && (line.back() == ' ' || line.back() == '\t'))
    line.pop_back();
  return line;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

}  // namespace

Lexicon Lexicon::load(std::istream& in, const TagInventory& inv) {
  Lexicon lex(inv);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0)
      throw ParseError("expected `surface<TAB>tags`", lineno);
    std::string surface = line.substr(0, tab);
    std::vector<std::string> atoms = split_ws(line.substr(tab + 1));
    if (atoms.empty()) throw ParseError("no tags for \"" + surface + "\"", lineno);
    LexiconEntry& entry = lex.entries_[surface];
    for (const std::string& atom : atoms) {
      std::string label = atom;
      std::string lemma;
      std::size_t colon = atom.find(':');
      if (colon != std::string::npos) {
        label = atom.substr(0, colon);
        lemma = atom.substr(colon + 1);
      }
      Tag tag;
      try {
        tag = inv.parse(label);
      } catch (const DataError& e) {
        throw ParseError(e.what(), lineno);
      }
      entry.tags.insert(tag);
      if (!lemma.empty()) entry.lemmas.emplace(tag, lemma);
    }
  }
  return lex;
}

void Lexicon::add(std::string_view surface, const TagSet& tags) {
  if (tags.empty()) throw DataError("empty tag set for lexicon entry");
  entries_[std::string(surface)].tags.merge(tags);
}

const LexiconEntry* Lexicon::find(std::string_view surface) const {
  auto it = entries_.find(std::string(surface));
  return it == entries_.end() ? nullptr : &it->second;
}

Guesser::Guesser(std::vector<EndingRule> endings, TagSet default_class,
                 TagSet capitalized_class, const TagInventory& inv)
    : inv_(&inv),
      endings_(std::move(endings)),
      default_class_(std::move(default_class)),
      capitalized_class_(std::move(capitalized_class)) {
  if (default_class_.empty() || capitalized_class_.empty())
    throw DataError("guesser needs non-empty DEFAULT and CAPITALIZED classes");
  for (std::size_t i = 0; i < endings_.size(); ++i) {
    const EndingRule& rule = endings_[i];
    if (rule.suffix.empty() || rule.tags.empty())
      throw DataError("empty guesser ending rule");
    for (std::size_t j = 0; j < i; ++j)
      if (endings_[j].suffix == rule.suffix)
        throw DataError("duplicate guesser suffix: " + rule.suffix);
  }
  auto check_open = [&](const TagSet& tags, const std::string& where) {
    for (Tag t : tags)
      if (!inv.is_open_class(t))
        throw DataError("guesser class for " + where +
                        " contains closed-class tag " + inv.name(t));
  };
  for (const EndingRule& rule : endings_) check_open(rule.tags, rule.suffix);
  check_open(default_class_, "DEFAULT");
  check_open(capitalized_class_, "CAPITALIZED");
}

Guesser Guesser::load(std::istream& in, const TagInventory& inv) {
  std::vector<EndingRule> endings;
  TagSet default_class;
  TagSet capitalized_class;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0)
      throw ParseError("expected `suffix<TAB>tags`", lineno);
    std::string head = line.substr(0, tab);
    TagSet tags;
    for (const std::string& label : split_ws(line.substr(tab + 1))) {
      try {
        tags.insert(inv.parse(label));
      } catch (const DataError& e) {
        throw ParseError(e.what(), lineno);
      }
    }
    if (tags.empty()) throw ParseError("no tags for \"" + head + "\"", lineno);
    if (head == "DEFAULT") {
      default_class = tags;
    } else if (head == "CAPITALIZED") {
      capitalized_class = tags;
    } else {
      endings.push_back({head, tags});
    }
  }
  try {
    return Guesser(std::move(endings), std::move(default_class),
                   std::move(capitalized_class), inv);
  } catch (const DataError& e) {
    throw ParseError(e.what(), lineno);
  }
}

TagSet Guesser::guess(std::string_view surface) const {
  const EndingRule* best = nullptr;
  for (const EndingRule& rule : endings_) {
    if (surface.size() < rule.suffix.size()) continue;
    if (surface.substr(surface.size() - rule.suffix.size()) != rule.suffix)
      continue;
    if (!best || rule.suffix.size() > best->suffix.size()) best = &rule;
  }
  if (best) return best->tags;
  if (utf8::starts_uppercase(surface)) return capitalized_class_;
  return default_class_;
}

std::string_view to_string(ReadingSource source) {
  switch (source) {
    case ReadingSource::Lexicon: return "lexicon";
    case ReadingSource::Guesser: return "guesser";
    case ReadingSource::Hint: return "hint";
  }
  return "lexicon";
}

Cohort analyze(const Lexicon& lexicon, const Guesser& guesser,
               const Token& token) {
  const TagInventory& inv = lexicon.inventory();
  switch (token.hint) {
    case TokenHint::Num:
      return {token, TagSet{inv.parse("NUM")}, ReadingSource::Hint};
    case TokenHint::Heure:
      return {token, TagSet{inv.parse("HEURE")}, ReadingSource::Hint};
    case TokenHint::Cm:
      return {token, TagSet{inv.parse("CM")}, ReadingSource::Hint};
    case TokenHint::Punct:
      return {token, TagSet{inv.parse("PUNCT")}, ReadingSource::Hint};
    case TokenHint::Word:
    case TokenHint::Mwe:
      break;
  }
  if (const LexiconEntry* entry = lexicon.find(token.surface))
    return {token, entry->tags, ReadingSource::Lexicon};
  std::string lowered = utf8::to_lower(token.surface);
  if (lowered != token.surface) {
    if (const LexiconEntry* entry = lexicon.find(lowered))
      return {token, entry->tags, ReadingSource::Lexicon};
  }
  return {token, guesser.guess(token.surface), ReadingSource::Guesser};
}

}  // namespace fstag
