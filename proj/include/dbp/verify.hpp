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

#ifndef DBP_VERIFY_HPP_
#define DBP_VERIFY_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "dbp/model.hpp"
#include "dbp/rational.hpp"

namespace dbp {

struct SlotViolation {
  std::size_t bin_index = 0;  // 0-based into solution.bins
  Len slot = 0;
  long long load = 0;
};

struct VerificationReport {
  bool complete = false;  // every task placed exactly once, no strangers
  bool feasible = false;  // every slot of every bin within capacity and range
  std::size_t bin_count = 0;
  std::optional<SlotViolation> first_violation;
  std::vector<long long> missing_ids;
  std::vector<long long> duplicate_ids;
  std::vector<long long> unknown_ids;

  bool ok() const { return complete && feasible; }
};

// Checks a solution against an instance: each task placed exactly once, every
// placement within [1, slots], and per-slot load within capacity in each bin.
// Runs an event sweep per bin; never builds a per-slot array.
VerificationReport verify_solution(const Instance& instance, const Solution& solution);

// ceil(total task area / (slots * capacity)); 0 when there are no tasks.
long long area_lower_bound(const Instance& instance);

// Fraction of the bin's slot-capacity rectangle covered by task area.
Rat bin_fullness(const Instance& instance, const Bin& bin);

}  // namespace dbp

#endif  // DBP_VERIFY_HPP_
