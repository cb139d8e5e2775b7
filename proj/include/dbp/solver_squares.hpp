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

#ifndef DBP_SOLVER_SQUARES_HPP_
#define DBP_SOLVER_SQUARES_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "dbp/model.hpp"

namespace dbp {

// Bin shape regimes for square tasks; the solver picks its construction by
// comparing the timeline T against the capacity C.
enum class SquareCase { WideBin, NearSquareWide, NearSquareTall, TallBin };

// WideBin when 3T >= 4C, NearSquareWide when C <= T < 4C/3, NearSquareTall
// when 3C/4 < T < C, TallBin otherwise. Exactly one case per shape; T = C
// lands in NearSquareWide.
SquareCase classify_square_case(Len slots, Len capacity);

// Leftmost fit for squares with side above a third of the capacity in a
// square bin. Sorts by side descending (ties by id) and places each square
// at the globally smallest feasible start across all open bins, lowest bin
// index on ties; a new bin opens when none admits it. Whenever that happens
// every existing bin must hold exactly one or four squares, which is checked
// at runtime.
std::vector<Bin> leftmost_fit_big_squares(const std::vector<Task>& squares, Len slots,
                                          Len capacity);

// Sorts squares with side in (C/4, C/3] by side descending and shelves them
// nine per bin, three rows of three. Requires a square bin.
std::vector<Bin> pack_nine_groups(const std::vector<Task>& squares, Len slots, Len capacity);

struct SquaresSolveReport {
  SquareCase square_case = SquareCase::NearSquareWide;
  std::vector<std::size_t> guesses_tried;  // empty for the square-bin solver
  std::size_t accepted_guess = 0;          // square-bin solver: certified lower bound
  std::size_t structured_bins = 0;
  std::size_t final_bins = 0;
  bool guarantee_certificate = false;  // final_bins <= 2 * accepted_guess
  std::string interval_packing_method;  // set when the one-dimensional reduction ran
};

struct SquaresSolveResult {
  Solution solution;
  SquaresSolveReport report;
};

// Square tasks in a square bin (T = C). Sides above C/3 go through leftmost
// fit and are re-shelved one bin each, sides in (C/4, C/3] are packed nine
// per bin, and the rest is filled in first-fit on top. No guessing is
// involved; the reported guess is a certified lower bound on the optimum.
SquaresSolveResult solve_squares_eq(const Instance& instance);

// Square tasks in an arbitrary bin. Dispatches on classify_square_case and
// tries every guess g from the area lower bound to the task count, keeping
// the best verified outcome (fewest bins, then smallest guess).
SquaresSolveResult solve_squares_general(const Instance& instance);

}  // namespace dbp

#endif  // DBP_SOLVER_SQUARES_HPP_
