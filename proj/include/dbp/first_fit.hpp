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

#ifndef DBP_FIRST_FIT_HPP_
#define DBP_FIRST_FIT_HPP_

#include <cstddef>
#include <vector>

#include "dbp/model.hpp"
#include "dbp/rational.hpp"
#include "dbp/structured.hpp"

namespace dbp {

// Admission rules for the tasks handed to first_fit_on_top.
//
// Standard mode: every task needs height <= delta_h * C and width
// <= delta_w * T; with enforce_condition the relation
// (1 - delta_h)(1 - delta_w) >= 1/k must hold, which makes every bin the
// run fills before opening a new one more than (1 - delta_h)(1 - delta_w)
// full, hence at least 1/k full.
//
// Mixed mode: every task needs height <= C/2, width <= T/2, and at least one
// of height <= delta_h * C or width <= delta_w * T; the filled-bin bound
// becomes min((1 - delta_h)/2, (1 - delta_w)/2), so enforce_condition
// requires 1 - delta_h >= 2/k and 1 - delta_w >= 2/k (and deltas <= 1/2).
struct FitParams {
  Rat k = Rat(1);
  Rat delta_h;
  Rat delta_w;
  bool mixed = false;
  bool enforce_condition = true;
};

// Snapshot taken each time a new bin had to be opened: the total loads of
// every bin fully scanned up to that moment, all of which are checked against
// the fill bound implied by the still-unplaced tasks.
struct BinOpeningRecord {
  std::size_t opened_index = 0;  // index of the new bin in the final solution
  std::vector<long long> scanned_fills;
};

struct FitAudit {
  Rat threshold;  // area fraction every fully scanned bin provably exceeds
  std::vector<BinOpeningRecord> openings;
  std::vector<long long> final_fills;  // total load per bin of the result
  std::size_t structured_bin_count = 0;
  std::size_t opened_bin_count = 0;
};

struct FitResult {
  Solution solution;
  FitAudit audit;
};

// Places `remaining` on top of a structured partial solution, first-fit
// style: bins with sorted profiles are scanned once each, left to right,
// jumping between slots where the load changes; at every position the whole
// task list is tried in its given order. A new bin opens only after the last
// scannable bin has been fully scanned with tasks still unplaced. Bins tagged
// as area-full are never scanned.
//
// Inputs are distrusted: tags are re-checked against the actual bins and the
// admission rule is checked per task (DomainError on violation). The fill
// guarantee the approximation proof relies on is re-derived at every bin
// opening from the actual loads; a miss means the implementation is wrong
// and throws logic_error.
FitResult first_fit_on_top(const Instance& instance, const StructuredSolution& structured,
                           const std::vector<Task>& remaining, const FitParams& params);

}  // namespace dbp

#endif  // DBP_FIRST_FIT_HPP_
