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

#include "fstag/rules.hpp"

#include <algorithm>
#include <istream>
#include <optional>

#include "fstag/errors.hpp"
#include "fstag/utf8.hpp"

namespace fstag {

namespace {

// ---------------------------------------------------------------------
// DSL lexer: atoms plus the punctuation { } ( ) >, with line/column.

struct Lexeme {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
  bool eof = false;
};

class Lexer {
 public:
  explicit Lexer(std::istream& in) { slurp(in); }

  const Lexeme& peek() const { return lexemes_[index_]; }
  Lexeme next() {
    Lexeme l = lexemes_[index_];
    if (!l.eof) ++index_;
    return l;
  }

 private:
  void slurp(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::size_t i = 0;
      while (i < line.size()) {
        char c = line[i];
        if (c == ' ' || c == '\t') {
          ++i;
          continue;
        }
        if (c == '#') break;
        if (c == '{' || c == '}' || c == '(' || c == ')' || c == '>') {
          lexemes_.push_back({std::string(1, c), lineno, i + 1, false});
          ++i;
          continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
               line[i] != '{' && line[i] != '}' && line[i] != '(' &&
               line[i] != ')' && line[i] != '>' && line[i] != '#')
          ++i;
        lexemes_.push_back(
            {line.substr(start, i - start), lineno, start + 1, false});
      }
    }
    lexemes_.push_back({"", lineno + 1, 1, true});
  }

  std::vector<Lexeme> lexemes_;
  std::size_t index_ = 0;
};

[[noreturn]] void fail(const Lexeme& at, const std::string& what) {
  throw ParseError(what, at.line, at.column);
}

// ---------------------------------------------------------------------
// Parser

class Parser {
 public:
  Parser(std::istream& in, const TagInventory& inv) : lex_(in), inv_(inv) {}

  RulePack parse() {
    RulePack pack;
    enum class Section { None, Reliable, Heuristic, Final };
    Section section = Section::None;
    for (;;) {
      const Lexeme& l = lex_.peek();
      if (l.eof) break;
      if (l.text == "RELIABLE") {
        section = Section::Reliable;
        lex_.next();
      } else if (l.text == "HEURISTIC") {
        section = Section::Heuristic;
        lex_.next();
      } else if (l.text == "FINAL") {
        section = Section::Final;
        lex_.next();
      } else if (l.text == "RULE") {
        Rule rule = parse_rule(
            section == Section::Reliable   ? std::optional(RuleTier::Reliable)
            : section == Section::Heuristic ? std::optional(RuleTier::Heuristic)
                                            : std::nullopt);
        for (const Rule& r : pack.reliable)
          if (r.name == rule.name) fail(l, "duplicate rule name: " + rule.name);
        for (const Rule& r : pack.heuristic)
          if (r.name == rule.name) fail(l, "duplicate rule name: " + rule.name);
        (rule.tier == RuleTier::Reliable ? pack.reliable : pack.heuristic)
            .push_back(std::move(rule));
      } else if (l.text == "PREFER") {
        parse_prefer(pack.final_preference);
      } else {
        fail(l, "expected RULE, PREFER or a section header, got \"" + l.text +
                    "\"");
      }
    }
    return pack;
  }

 private:
  Lexeme expect(const std::string& text) {
    Lexeme l = lex_.next();
    if (l.eof || l.text != text)
      fail(l, "expected \"" + text + "\", got \"" + (l.eof ? "<eof>" : l.text) +
                  "\"");
    return l;
  }

  Tag parse_tag(const Lexeme& at, const std::string& label) {
    try {
      return inv_.parse(label);
    } catch (const DataError& e) {
      fail(at, e.what());
    }
  }

  TagSet parse_tagset() {
    Lexeme open = expect("{");
    TagSet tags;
    for (;;) {
      Lexeme l = lex_.next();
      if (l.eof) fail(l, "unterminated tag set");
      if (l.text == "}") break;
      tags.insert(parse_tag(l, l.text));
    }
    (void)open;
    return tags;
  }

  std::vector<std::string> parse_wordset() {
    Lexeme open = expect("{");
    std::vector<std::string> words;
    for (;;) {
      Lexeme l = lex_.next();
      if (l.eof) fail(l, "unterminated word set");
      if (l.text == "}") break;
      words.push_back(l.text);
    }
    if (words.empty()) fail(open, "empty word set");
    return words;
  }

  static void fold_words(std::vector<std::string>& words) {
    for (std::string& w : words) w = utf8::to_lower(w);
  }

  bool parse_position(const std::string& text, int* position, bool* scan) {
    std::string_view s = text;
    *scan = false;
    if (!s.empty() && s[0] == '*') {
      *scan = true;
      s.remove_prefix(1);
    }
    if (s.empty()) return false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') i = 1;
    if (i >= s.size()) return false;
    for (std::size_t j = i; j < s.size(); ++j)
      if (!utf8::is_ascii_digit(s[j])) return false;
    *position = std::stoi(std::string(s));
    return true;
  }

  Condition parse_condition() {
    Condition cond;
    if (lex_.peek().text == "NOT") {
      cond.negated = true;
      lex_.next();
    }
    expect("(");
    Lexeme pos = lex_.next();
    if (pos.eof) fail(pos, "unterminated condition");
    if (!parse_position(pos.text, &cond.position, &cond.scan))
      fail(pos, "expected a position offset, got \"" + pos.text + "\"");
    if (cond.scan && cond.position == 0)
      fail(pos, "a scan needs a non-zero start offset");
    Lexeme test = lex_.next();
    if (test.text == "TAG") {
      cond.test = Condition::Test::Tags;
      cond.tags = parse_tagset();
      if (cond.tags.empty()) fail(test, "empty tag set in condition");
    } else if (test.text == "WORD") {
      cond.test = Condition::Test::Words;
      cond.words = parse_wordset();
    } else if (test.text == "BOS" || test.text == "EOS") {
      cond.test =
          test.text == "BOS" ? Condition::Test::Bos : Condition::Test::Eos;
      if (cond.scan) fail(test, test.text + " cannot be scanned for");
    } else {
      fail(test, "expected TAG, WORD, BOS or EOS, got \"" + test.text + "\"");
    }
    for (;;) {
      Lexeme l = lex_.next();
      if (l.eof) fail(l, "unterminated condition");
      if (l.text == ")") break;
      if (l.text == "FOLD" && cond.test == Condition::Test::Words) {
        cond.fold = true;
        fold_words(cond.words);
      } else if (l.text == "BARRIER") {
        if (!cond.scan) fail(l, "BARRIER is only meaningful on a scan");
        cond.barrier = parse_tagset();
        if (cond.barrier.empty()) fail(l, "empty barrier set");
      } else if (l.text == "ONLY") {
        cond.only_reading = true;
      } else {
        fail(l, "unexpected \"" + l.text + "\" in condition");
      }
    }
    return cond;
  }

  Rule parse_rule(std::optional<RuleTier> section_tier) {
    expect("RULE");
    Lexeme name = lex_.next();
    if (name.eof) fail(name, "missing rule name");
    Rule rule;
    rule.name = name.text;

    Lexeme l = lex_.next();
    std::optional<RuleTier> tier = section_tier;
    if (l.text == "RELIABLE") {
      tier = RuleTier::Reliable;
      l = lex_.next();
    } else if (l.text == "HEURISTIC") {
      tier = RuleTier::Heuristic;
      l = lex_.next();
    }
    if (!tier)
      fail(l, "rule \"" + rule.name +
                  "\" has no tier (use RELIABLE/HEURISTIC inline or a section)");
    rule.tier = *tier;

    if (l.text == "SELECT") {
      rule.action = RuleAction::Select;
    } else if (l.text == "REMOVE") {
      rule.action = RuleAction::Remove;
    } else {
      fail(l, "expected SELECT or REMOVE, got \"" + l.text + "\"");
    }
    Lexeme target_at = lex_.peek();
    rule.target = parse_tagset();
    if (rule.target.empty()) fail(target_at, "empty rule target");

    if (lex_.peek().text == "ON") {
      lex_.next();
      expect("WORD");
      rule.target_words = parse_wordset();
      if (lex_.peek().text == "FOLD") {
        lex_.next();
        rule.target_fold = true;
        fold_words(rule.target_words);
      }
    }
    if (lex_.peek().text == "IF") {
      lex_.next();
      rule.conditions.push_back(parse_condition());
      while (lex_.peek().text == "AND") {
        lex_.next();
        rule.conditions.push_back(parse_condition());
      }
    }
    return rule;
  }

  void parse_prefer(FinalPreference& pref) {
    expect("PREFER");
    PreferenceRanking* ranking = &pref.ranking;
    if (lex_.peek().text == "WORD") {
      lex_.next();
      std::vector<std::string> words = parse_wordset();
      fold_words(words);
      // One PREFER WORD line may list several surfaces; they share the
      // fragment.  Rankings merge per word across lines.
      Lexeme at = lex_.peek();
      std::vector<Tag> fragment = parse_prefer_tags(at);
      for (const std::string& w : words) {
        PreferenceRanking* wr = nullptr;
        for (auto& [key, r] : pref.word_rankings)
          if (key == w) wr = &r;
        if (!wr) {
          pref.word_rankings.emplace_back(w, PreferenceRanking{});
          wr = &pref.word_rankings.back().second;
        }
        for (Tag t : fragment) wr->append(t);
      }
      return;
    }
    Lexeme at = lex_.peek();
    for (Tag t : parse_prefer_tags(at)) ranking->append(t);
  }

  std::vector<Tag> parse_prefer_tags(const Lexeme& at) {
    std::vector<Tag> tags;
    for (;;) {
      Lexeme l = lex_.next();
      if (l.eof) fail(l, "PREFER needs at least one tag");
      tags.push_back(parse_tag(l, l.text));
      if (lex_.peek().text != ">") break;
      lex_.next();
    }
    if (tags.empty()) fail(at, "PREFER needs at least one tag");
    return tags;
  }

  Lexer lex_;
  const TagInventory& inv_;
};

// ---------------------------------------------------------------------
// Engine

bool word_matches(const std::vector<std::string>& words, bool fold,
                  const std::string& surface) {
  const std::string& probe = fold ? utf8::to_lower(surface) : surface;
  return std::find(words.begin(), words.end(), probe) != words.end();
}

bool test_cohort(const Condition& cond, const Cohort& cohort) {
  switch (cond.test) {
    case Condition::Test::Tags: {
      if (cond.only_reading)
        return cohort.readings.size() == 1 &&
               cond.tags.contains(cohort.readings.front());
      return cohort.readings.intersects(cond.tags);
    }
    case Condition::Test::Words: {
      bool member = word_matches(cond.words, cond.fold, cohort.token.surface);
      if (cond.only_reading) return member && cohort.readings.size() == 1;
      return member;
    }
    case Condition::Test::Bos:
    case Condition::Test::Eos:
      return false;  // handled positionally, not per cohort
  }
  return false;
}

bool eval_condition(const Condition& cond, const SentenceLattice& lattice,
                    std::size_t target) {
  const auto len = static_cast<long>(lattice.size());
  long idx = static_cast<long>(target) + cond.position;
  bool result = false;
  if (cond.test == Condition::Test::Bos) {
    result = idx < 0;
  } else if (cond.test == Condition::Test::Eos) {
    result = idx >= len;
  } else if (!cond.scan) {
    result = idx >= 0 && idx < len &&
             test_cohort(cond, lattice.cohorts[static_cast<std::size_t>(idx)]);
  } else {
    long step = cond.position < 0 ? -1 : 1;
    while (idx >= 0 && idx < len) {
      const Cohort& c = lattice.cohorts[static_cast<std::size_t>(idx)];
      if (test_cohort(cond, c)) {
        result = true;
        break;
      }
      if (!cond.barrier.empty() && c.readings.intersects(cond.barrier)) break;
      idx += step;
    }
  }
  return cond.negated ? !result : result;
}

bool readings_equal(const SentenceLattice& a, const SentenceLattice& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.cohorts[i].readings != b.cohorts[i].readings) return false;
  return true;
}

SentenceLattice run_tier(const std::vector<Rule>& rules,
                         SentenceLattice lattice) {
  // Iterate the tier to a fixpoint; every pass either removes a reading
  // somewhere or is the last.
  for (;;) {
    SentenceLattice before = lattice;
    for (const Rule& rule : rules) lattice = apply_rule(rule, lattice);
    if (readings_equal(before, lattice)) break;
  }
  return lattice;
}

}  // namespace

std::size_t PreferenceRanking::rank(Tag t) const {
  for (std::size_t i = 0; i < order.size(); ++i)
    if (order[i] == t) return i;
  return order.size() + t.id();
}

void PreferenceRanking::append(Tag t) {
  for (Tag existing : order)
    if (existing == t) return;
  order.push_back(t);
}

const PreferenceRanking* FinalPreference::find_word_ranking(
    const std::string& folded) const {
  for (const auto& [key, ranking] : word_rankings)
    if (key == folded) return &ranking;
  return nullptr;
}

RulePack parse_rules(std::istream& in, const TagInventory& inv) {
  return Parser(in, inv).parse();
}

SentenceLattice apply_rule(const Rule& rule, const SentenceLattice& lattice) {
  SentenceLattice out = lattice;
  for (std::size_t i = 0; i < out.size(); ++i) {
    Cohort& cohort = out.cohorts[i];
    if (!rule.target_words.empty() &&
        !word_matches(rule.target_words, rule.target_fold,
                      cohort.token.surface))
      continue;
    TagSet kept = cohort.readings.intersect(rule.target);
    if (kept.empty()) continue;
    bool conditions_hold = true;
    for (const Condition& cond : rule.conditions) {
      if (!eval_condition(cond, out, i)) {
        conditions_hold = false;
        break;
      }
    }
    if (!conditions_hold) continue;
    if (rule.action == RuleAction::Select) {
      cohort.readings = kept;
    } else {
      TagSet rest = cohort.readings.subtract(rule.target);
      if (rest.empty()) continue;  // last-reading protection
      cohort.readings = rest;
    }
  }
  return out;
}

SentenceLattice apply_tiers(const RulePack& pack,
                            const SentenceLattice& lattice, TierLimit limit) {
  SentenceLattice out = run_tier(pack.reliable, lattice);
  if (limit >= TierLimit::Heuristic) out = run_tier(pack.heuristic, out);
  if (limit >= TierLimit::Final)
    out = apply_final_preference(pack.final_preference, out);
  return out;
}

SentenceLattice apply_final_preference(const FinalPreference& pref,
                                       const SentenceLattice& lattice) {
  SentenceLattice out = lattice;
  for (Cohort& cohort : out.cohorts) {
    if (cohort.readings.size() <= 1) continue;
    const PreferenceRanking* word_ranking =
        pref.find_word_ranking(utf8::to_lower(cohort.token.surface));
    Tag best;
    bool chosen = false;
    if (word_ranking) {
      // Only readings the word ranking actually lists; otherwise fall
      // through to the global ranking.
      std::size_t best_rank = 0;
      for (Tag t : cohort.readings) {
        std::size_t r = word_ranking->rank(t);
        if (r >= word_ranking->order.size()) continue;
        if (!chosen || r < best_rank) {
          best = t;
          best_rank = r;
          chosen = true;
        }
      }
    }
    if (!chosen) {
      std::size_t best_rank = 0;
      for (Tag t : cohort.readings) {
        std::size_t r = pref.ranking.rank(t);
        if (!chosen || r < best_rank) {
          best = t;
          best_rank = r;
          chosen = true;
        }
      }
    }
    cohort.readings = TagSet{best};
  }
  return out;
}

}  // namespace fstag
