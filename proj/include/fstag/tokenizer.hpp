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

// Longest-match tokenizer and sentence splitter.  Matching is maximal
// munch over the categories NUM, HEURE, MWE, elided word, word and
// punctuation; length ties go to the earlier category in that order.

#ifndef FSTAG_TOKENIZER_HPP
#define FSTAG_TOKENIZER_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fstag {

enum class TokenHint { Word, Num, Heure, Cm, Punct, Mwe };

std::string_view to_string(TokenHint hint);

struct Token {
  std::string surface;
  std::size_t begin = 0;  // byte offsets into the input
  std::size_t end = 0;
  TokenHint hint = TokenHint::Word;
};

// Multi-word expressions, e.g. "a priori".  A single space in an entry
// matches any run of whitespace in the input; the token surface keeps
// the input characters verbatim.
class MweList {
 public:
  MweList() = default;
  static MweList load(std::istream& in);

  void add(std::string expression);
  bool empty() const { return entries_.empty(); }

  // Length of the longest entry matching text at pos (0 if none).  A
  // match must not end in the middle of a word or number.
  std::size_t match(std::string_view text, std::size_t pos) const;

 private:
  std::vector<std::string> entries_;
};

// Splits text into classified tokens.  Total: every non-whitespace
// character lands in exactly one token; unclassifiable characters
// become PUNCT tokens.
std::vector<Token> tokenize(std::string_view text,
                            const MweList& mwes = MweList());

// Groups tokens into sentences.  A sentence ends at a PUNCT token whose
// surface is ".", "!", "?" or "…"; a trailing run without a terminator
// forms a final sentence.
std::vector<std::vector<Token>> split_sentences(std::vector<Token> tokens);

}  // namespace fstag

#endif  // FSTAG_TOKENIZER_HPP
