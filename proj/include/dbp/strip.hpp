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

#ifndef DBP_STRIP_HPP_
#define DBP_STRIP_HPP_

#include <optional>
#include <vector>

#include "dbp/model.hpp"
#include "dbp/structured.hpp"

namespace dbp {

// A task pinned at a vertical offset inside a strip of width `slots` and
// height `budget`. Left-pile tasks start at the left edge, right-pile tasks
// end at the right edge.
struct StripItem {
  Task task;
  long long offset = 0;  // bottom edge, measured from the strip's bottom
};

struct StripLayout {
  long long budget = 0;
  Len slots = 0;
  std::vector<StripItem> left;
  std::vector<StripItem> right;
  std::optional<Task> dropped;  // overflow task owned by neither pile
};

// Sorts tasks by width (widest first, ties by id) and stacks them bottom-up
// against the left edge until the pile first exceeds `budget`; the task that
// tipped it over is dropped and all later tasks are stacked top-down against
// the right edge. Returns nullopt when the strip cannot host the layout:
// the right pile overflows the budget, or a left and a right task share a
// height range but their widths together exceed `slots`.
std::optional<StripLayout> two_pile_strip(std::vector<Task> tasks, long long budget,
                                          Len slots);

// Cuts the strip at every multiple of `capacity` into bins. Tasks crossing a
// cut go to shelf bins, nine cuts per bin, each cut's pair side by side.
// Bands with tasks on both edges become half-full bins; bands with left tasks
// only become sorted stacks; the one band where the right pile peters out
// either stays half-full or sends its right tasks on top of the dropped task.
// The budget must be a multiple of `capacity`. The result promises at most
// 2 * (budget / capacity) bins.
StructuredSolution cut_strip(const StripLayout& layout, Len capacity);

}  // namespace dbp

#endif  // DBP_STRIP_HPP_
