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

#ifndef FSTAG_ERRORS_HPP
#define FSTAG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fstag {

// Semantic problems in inputs: unknown tags, bad invariants, missing classes.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Syntax problems in a data file, located by line (1-based) and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column = 0)
      : std::runtime_error(format(what, line, column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line,
                            std::size_t column) {
    std::string msg = "line " + std::to_string(line);
    if (column > 0) msg += ", column " + std::to_string(column);
    msg += ": " + what;
    return msg;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace fstag

#endif  // FSTAG_ERRORS_HPP
