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

#ifndef DBP_SOLVER_GENERAL_HPP_
#define DBP_SOLVER_GENERAL_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dbp/model.hpp"
#include "dbp/structured.hpp"

namespace dbp {

// The solver guesses the optimal bin count g and packs the tall, wide, and
// fat tasks with a different strategy per regime: guesses up to 70 go through
// an exact case analysis on the total tall width and wide height, larger
// guesses through asymptotically good one-dimensional bin packing. Small
// tasks are first-fit placed on top afterwards.
enum class GuessRegime { Le70, Gt70 };

// One workable structured packing of the tall, wide, and fat tasks for a
// guessed bin count, together with which construction produced it.
struct StructuredGuess {
  StructuredSolution structured;
  std::string subcase;
  // Guessed split of the one-dimensional bins in the mixed constructions:
  // bins kept at full size versus bins restricted to half size.
  std::optional<std::size_t> full_bins;
  std::optional<std::size_t> half_bins;
};

// Case analysis for guesses g <= 70, branching on whether the total width of
// tall tasks exceeds g*T - T/9 and the total height of wide tasks exceeds
// g*C - C/9:
//   both above:  no fat task can coexist with that much tall and wide load,
//                so the guess is rejected unless there are none; tall widths
//                and wide heights are packed by first-fit decreasing.
//   both below:  tall and wide are each packed into g one-dimensional bins by
//                an exact search; fat tasks are shelved four per bin.
//   tall above:  tall widths go through first-fit decreasing; wide heights
//                are packed into a guessed mix of full- and half-capacity
//                bins, and every half bin takes two fat tasks on top.
//   wide above:  mirrored, except half-width tall rows are paired two per
//                bin, an odd leftover row takes one fat task beside it.
// Leftover fat tasks are shelved four per bin in every branch. Returns
// nullopt when no construction lands within 3*guess bins, which is the signal
// that the guess is too small.
std::optional<StructuredGuess> structured_le70(const Instance& instance, std::size_t guess);

// Construction for guesses g > 70. With at most 132*g/35 fat tasks they are
// shelved four per bin and the tall and wide one-dimensional instances are
// packed by the rounding scheme with epsilon = 1/70; with more fat than that,
// tall and wide tasks whose other dimension exceeds a third of the bin get a
// bin each, and the remaining tall (wide) tasks are packed greedily side by
// side (stacked), which fills every such bin beyond a third except the last.
// Returns nullopt when the result lands beyond 3*guess bins.
std::optional<StructuredGuess> structured_gt70(const Instance& instance, std::size_t guess);

struct GeneralSolveReport {
  std::vector<std::size_t> guesses_tried;
  std::size_t accepted_guess = 0;
  GuessRegime regime = GuessRegime::Le70;
  std::string subcase;
  std::optional<std::size_t> full_bins;
  std::optional<std::size_t> half_bins;
  std::size_t structured_bins = 0;
  std::size_t final_bins = 0;
  bool guarantee_certificate = false;  // final_bins <= 3 * accepted_guess
  // Set when every guess was rejected; the solution is then a plain shelf
  // packing with no ratio guarantee and needs investigating.
  bool used_fallback = false;
};

struct GeneralSolveResult {
  Solution solution;
  GeneralSolveReport report;
};

// Packs an arbitrary instance into at most three times the optimal number of
// bins: for each guessed bin count from the area lower bound up to n, builds
// the structured packing of tall, wide, and fat tasks for the matching
// regime, first-fit places the small tasks on top, and keeps the best
// verified outcome (fewest bins, then smallest guess).
GeneralSolveResult solve_general(const Instance& instance);

struct ClaimCheck {
  bool premise = false;
  bool conclusion = false;
  bool counterexample = false;  // premise holds and the conclusion fails
};

// Structural facts checked on one feasible bin. Totals are over the tasks
// placed in the bin; fractions refer to the timeline T and capacity C.
struct StructuralReport {
  std::size_t fat_count = 0;
  long long tall_width = 0;
  long long wide_height = 0;
  // At least 3 fat and tall width > 8T/9 implies wide height < 4C/9.
  ClaimCheck three_fat_tall_heavy;
  // At least 3 fat and wide height > 8C/9 implies tall width < 4T/9.
  ClaimCheck three_fat_wide_heavy;
  // At least 4 fat implies tall width <= 2T/3 and wide height <= 2C/3.
  ClaimCheck four_fat;
  bool any_counterexample = false;
};

// Evaluates the three bounds above on a single bin. The constructions in
// structured_le70 lean on them, so a counterexample means either this checker
// or the solver's case analysis is wrong. Throws DomainError when a placement
// leaves the timeline or overloads a slot: the bounds only claim anything
// about feasible bins.
StructuralReport check_fat_task_bounds(const Instance& instance, const Bin& bin);

}  // namespace dbp

#endif  // DBP_SOLVER_GENERAL_HPP_
