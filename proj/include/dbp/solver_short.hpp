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

#ifndef DBP_SOLVER_SHORT_HPP_
#define DBP_SOLVER_SHORT_HPP_

#include <cstddef>
#include <vector>

#include "dbp/model.hpp"

namespace dbp {

struct ShortSolveReport {
  std::vector<std::size_t> guesses_tried;
  std::size_t accepted_guess = 0;
  std::size_t structured_bins = 0;
  std::size_t final_bins = 0;
  bool guarantee_certificate = false;  // final_bins <= 2 * accepted_guess
};

struct ShortSolveResult {
  Solution solution;
  ShortSolveReport report;
};

// Packs an instance whose tasks all have 9 * height <= capacity into at most
// twice the optimal number of bins. For each guessed bin count g from the
// area lower bound up to n, the tasks wider than a third of the timeline are
// stacked into a two-pile strip of height capacity * g and cut into bins;
// everything else is first-fit placed on top. The best verified outcome over
// all workable guesses is returned (fewest bins, then smallest guess).
// Throws DomainError when a task is too tall for this solver.
ShortSolveResult solve_short(const Instance& instance);

}  // namespace dbp

#endif  // DBP_SOLVER_SHORT_HPP_
