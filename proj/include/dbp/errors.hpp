// Copyright 2026 The dbp Authors
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

#ifndef DBP_ERRORS_HPP_
#define DBP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace dbp {

// A task or parameter falls outside the family a routine is defined for
// (e.g. a tall task handed to the short-task solver). The CLI maps this to
// exit code 2.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed instance or solution text. `line` is 1-based; 0 means the
// location is not tied to a specific line. The CLI maps this to exit code 1.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace dbp

#endif  // DBP_ERRORS_HPP_
