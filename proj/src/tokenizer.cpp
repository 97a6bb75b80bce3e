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

#include "fstag/tokenizer.hpp"

#include <algorithm>
#include <array>
#include <istream>

#include "fstag/utf8.hpp"

namespace fstag {

namespace {

using utf8::is_ascii_digit;

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Elided clitic prefixes; the apostrophe stays attached to the left
// fragment so the lexicon can list the elided forms directly.
const std::array<std::string_view, 9> kElisionPrefixes = {
    "l", "d", "n", "qu", "m", "t", "s", "j", "c"};

// NUM: digits with , . / + - % strictly between digit groups.
std::size_t match_num(std::string_view text, std::size_t pos) {
  std::size_t i = pos;
  if (i >= text.size() || !is_ascii_digit(text[i])) return 0;
  while (i < text.size() && is_ascii_digit(text[i])) ++i;
  for (;;) {
    if (i >= text.size()) break;
    char sep = text[i];
    if (sep != ',' && sep != '.' && sep != '/' && sep != '+' && sep != '-' &&
        sep != '%')
      break;
    std::size_t j = i + 1;
    if (j >= text.size() || !is_ascii_digit(text[j])) break;
    while (j < text.size() && is_ascii_digit(text[j])) ++j;
    i = j;
  }
  return i - pos;
}

// HEURE: digits 'h' digits, or digit groups joined by ':'.
std::size_t match_heure(std::string_view text, std::size_t pos) {
  std::size_t i = pos;
  if (i >= text.size() || !is_ascii_digit(text[i])) return 0;
  while (i < text.size() && is_ascii_digit(text[i])) ++i;
  if (i < text.size() && text[i] == 'h') {
    std::size_t j = i + 1;
    if (j < text.size() && is_ascii_digit(text[j])) {
      while (j < text.size() && is_ascii_digit(text[j])) ++j;
      return j - pos;
    }
    return 0;
  }
  if (i < text.size() && text[i] == ':') {
    std::size_t end = i;
    std::size_t j = i;
    while (j < text.size() && text[j] == ':') {
      std::size_t k = j + 1;
      if (k >= text.size() || !is_ascii_digit(text[k])) break;
      while (k < text.size() && is_ascii_digit(text[k])) ++k;
      end = k;
      j = k;
    }
    return end > i ? end - pos : 0;
  }
  return 0;
}

// Word run; stops after the apostrophe of an elided prefix.  Returns
// the match length and whether it is an elision.
std::size_t match_word(std::string_view text, std::size_t pos,
                       bool* elision_out) {
  std::size_t i = pos;
  while (i < text.size() && utf8::is_letter_at(text, i))
    i += utf8::sequence_length(text, i);
  if (elision_out) *elision_out = false;
  if (i == pos) return 0;
  std::size_t apo_len = 0;
  if (i < text.size() && utf8::is_apostrophe_at(text, i, &apo_len)) {
    std::string lowered = utf8::to_lower(text.substr(pos, i - pos));
    for (std::string_view prefix : kElisionPrefixes) {
      if (lowered == prefix) {
        if (elision_out) *elision_out = true;
        return i - pos + apo_len;
      }
    }
  }
  return i - pos;
}

}  // namespace

std::string_view to_string(TokenHint hint) {
  switch (hint) {
    case TokenHint::Word: return "WORD";
    case TokenHint::Num: return "NUM";
    case TokenHint::Heure: return "HEURE";
    case TokenHint::Cm: return "CM";
    case TokenHint::Punct: return "PUNCT";
    case TokenHint::Mwe: return "MWE";
  }
  return "WORD";
}

MweList MweList::load(std::istream& in) {
  MweList list;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    list.add(line.substr(start));
  }
  return list;
}

void MweList::add(std::string expression) {
  if (expression.empty()) return;
  entries_.push_back(std::move(expression));
  // Longest entries first so the first hit is the longest match.
  std::sort(entries_.begin(), entries_.end(),
            [](const std::string& a, const std::string& b) {
              return a.size() != b.size() ? a.size() > b.size() : a < b;
            });
}

std::size_t MweList::match(std::string_view text, std::size_t pos) const {
  std::size_t best = 0;
  for (const std::string& entry : entries_) {
    std::size_t i = pos;
    std::size_t e = 0;
    bool ok = true;
    while (e < entry.size()) {
      if (entry[e] == ' ') {
        std::size_t start = i;
        while (i < text.size() && is_space(text[i])) ++i;
        if (i == start) {
          ok = false;
          break;
        }
        ++e;
      } else if (i < text.size() && text[i] == entry[e]) {
        ++i;
        ++e;
      } else {
        ok = false;
        break;
      }
    }
    // The expression must end at a boundary, not inside a word or number.
    if (ok && i < text.size() &&
        (utf8::is_letter_at(text, i) || is_ascii_digit(text[i]))) {
      ok = false;
    }
    if (ok && i - pos > best) best = i - pos;
  }
  return best;
}

std::vector<Token> tokenize(std::string_view text, const MweList& mwes) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (is_space(text[pos])) {
      ++pos;
      continue;
    }
    struct Candidate {
      std::size_t len;
      TokenHint hint;
    };
    bool elision = false;
    const Candidate candidates[] = {
        {match_num(text, pos), TokenHint::Num},
        {match_heure(text, pos), TokenHint::Heure},
        {mwes.match(text, pos), TokenHint::Mwe},
        {match_word(text, pos, &elision), TokenHint::Word},
    };
    Candidate best{0, TokenHint::Punct};
    for (const Candidate& c : candidates) {
      if (c.len > best.len) best = c;
    }
    if (best.len == 0) {
      // Punctuation or any other unclassified character: one code point.
      std::size_t len = utf8::sequence_length(text, pos);
      std::string surface(text.substr(pos, len));
      TokenHint hint = surface == "," ? TokenHint::Cm : TokenHint::Punct;
      tokens.push_back({std::move(surface), pos, pos + len, hint});
      pos += len;
      continue;
    }
    tokens.push_back({std::string(text.substr(pos, best.len)), pos,
                      pos + best.len, best.hint});
    pos += best.len;
  }
  return tokens;
}

std::vector<std::vector<Token>> split_sentences(std::vector<Token> tokens) {
  std::vector<std::vector<Token>> sentences;
  std::vector<Token> current;
  for (Token& tok : tokens) {
    bool terminator =
        tok.hint == TokenHint::Punct &&
        (tok.surface == "." || tok.surface == "!" || tok.surface == "?" ||
         tok.surface == "\xE2\x80\xA6");
    current.push_back(std::move(tok));
    if (terminator) {
      sentences.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) sentences.push_back(std::move(current));
  return sentences;
}

}  // namespace fstag
