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

// Minimal UTF-8 helpers, enough for French text: ASCII plus the
// Latin-1 supplement accented letters, Œ/œ and Ÿ.  Input is treated
// as-is; no normalization is attempted.

#ifndef FSTAG_UTF8_HPP
#define FSTAG_UTF8_HPP

#include <cstddef>
#include <string>
#include <string_view>

namespace fstag::utf8 {

// Byte length of the code point starting at text[pos] (1 for malformed bytes).
inline std::size_t sequence_length(std::string_view text, std::size_t pos) {
  unsigned char b = static_cast<unsigned char>(text[pos]);
  std::size_t len = 1;
  if ((b & 0xE0) == 0xC0) len = 2;
  else if ((b & 0xF0) == 0xE0) len = 3;
  else if ((b & 0xF8) == 0xF0) len = 4;
  if (pos + len > text.size()) len = 1;
  return len;
}

inline bool is_ascii_letter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

// Letter test for the code point starting at text[pos].  Covers what
// French prose needs: ASCII letters, the Latin-1 supplement letters
// (À-ÿ minus × and ÷) and Latin Extended-A (œ, Œ).  The Latin-1 symbol
// range (« » ° ...) and the general punctuation block (quotes, dashes,
// ellipsis) are punctuation.  Unknown scripts count as letters so the
// tokenizer stays total.
inline bool is_letter_at(std::string_view text, std::size_t pos) {
  unsigned char b = static_cast<unsigned char>(text[pos]);
  if (b < 0x80) return is_ascii_letter(static_cast<char>(b));
  if (b == 0xC2) return false;  // U+0080..U+00BF: symbols and punctuation
  if (b == 0xC3) {
    if (pos + 1 >= text.size()) return false;
    unsigned char c = static_cast<unsigned char>(text[pos + 1]);
    return c != 0x97 && c != 0xB7;  // × and ÷
  }
  if (b == 0xE2) return false;  // U+2000.. : punctuation, math symbols
  return true;
}

// True if the code point at text[pos] is an apostrophe (straight or curly).
inline bool is_apostrophe_at(std::string_view text, std::size_t pos,
                             std::size_t* len_out) {
  if (text[pos] == '\'') {
    if (len_out) *len_out = 1;
    return true;
  }
  if (text.substr(pos).rfind("\xE2\x80\x99", 0) == 0) {
    if (len_out) *len_out = 3;
    return true;
  }
  return false;
}

// Lowercases ASCII A-Z, the Latin-1 supplement uppercase range, Œ and Ÿ.
inline std::string to_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char b = static_cast<unsigned char>(s[i]);
    if (b < 0x80) {
      out.push_back(b >= 'A' && b <= 'Z' ? static_cast<char>(b + 32)
                                         : static_cast<char>(b));
      ++i;
      continue;
    }
    if (b == 0xC3 && i + 1 < s.size()) {
      unsigned char c = static_cast<unsigned char>(s[i + 1]);
      if (c >= 0x80 && c <= 0x9E && c != 0x97) {  // À..Þ except ×
        out.push_back(static_cast<char>(0xC3));
        out.push_back(static_cast<char>(c + 0x20));
        i += 2;
        continue;
      }
    }
    if (b == 0xC5 && i + 1 < s.size()) {
      unsigned char c = static_cast<unsigned char>(s[i + 1]);
      if (c == 0x92) {  // Œ -> œ
        out.push_back(static_cast<char>(0xC5));
        out.push_back(static_cast<char>(0x93));
        i += 2;
        continue;
      }
      if (c == 0xB8) {  // Ÿ -> ÿ
        out.push_back(static_cast<char>(0xC3));
        out.push_back(static_cast<char>(0xBF));
        i += 2;
        continue;
      }
    }
    std::size_t len = sequence_length(s, i);
    out.append(s.substr(i, len));
    i += len;
  }
  return out;
}

// True if the first code point of s is an uppercase letter.
inline bool starts_uppercase(std::string_view s) {
  if (s.empty()) return false;
  unsigned char b = static_cast<unsigned char>(s[0]);
  if (b < 0x80) return b >= 'A' && b <= 'Z';
  if (b == 0xC3 && s.size() >= 2) {
    unsigned char c = static_cast<unsigned char>(s[1]);
    return c >= 0x80 && c <= 0x9E && c != 0x97;
  }
  if (b == 0xC5 && s.size() >= 2) {
    unsigned char c = static_cast<unsigned char>(s[1]);
    return c == 0x92 || c == 0xB8;
  }
  return false;
}

}  // namespace fstag::utf8

#endif  // FSTAG_UTF8_HPP
