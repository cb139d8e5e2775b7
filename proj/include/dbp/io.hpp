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

#ifndef DBP_IO_HPP_
#define DBP_IO_HPP_

#include <string>

#include "dbp/errors.hpp"
#include "dbp/model.hpp"

namespace dbp {

// Text formats, both line-based, UTF-8 with LF newlines. '#' starts a comment
// and blank lines are skipped everywhere.
//
// Instance:   "dbp 1"      then "T C"            then one "id w h" per task.
// Solution:   "dbp-sol 1"  then one "bin_index task_id start" per placement;
//             bin indices are 0-based and contiguous, starts are 1-based.

// Throws ParseError for structural problems (naming the offending line) and
// leaves semantic checks to validate_instance, except duplicate ids, which
// are reported here so the message can point at the second occurrence.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& instance);

// Task ids must exist in the instance. Placements keep file order within
// each bin; bin indices must cover 0..max with no gap. Overlap and coverage
// problems are left to verify_solution.
Solution parse_solution(const std::string& text, const Instance& instance);
std::string serialize_solution(const Solution& solution);

}  // namespace dbp

#endif  // DBP_IO_HPP_
