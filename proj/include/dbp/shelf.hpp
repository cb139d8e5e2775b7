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

#ifndef DBP_SHELF_HPP_
#define DBP_SHELF_HPP_

#include <optional>
#include <vector>

#include "dbp/model.hpp"

namespace dbp {

// Next-fit decreasing height. Tasks are sorted by height desc, width desc,
// id asc, then laid out left to right on shelves; a shelf's height is its
// first task's height. A new bin opens when the next shelf does not fit under
// the capacity. Every emitted bin has a non-increasing load profile.
std::vector<Bin> nfdh(std::vector<Task> tasks, Len slots, Len capacity);

// All tasks at slot 1, heights simply stacked. Sorting the tasks by width
// desc makes the profile non-increasing. Throws DomainError when the stack
// exceeds the capacity or a task is wider than the timeline.
Bin stack_sorted(std::vector<Task> tasks, Len slots, Len capacity);

// Tries hard to fit all tasks into one bin with a non-increasing profile:
// plain stack, then nfdh, then (for at most 5 tasks) splitting into two
// stacked columns, widest column at slot 1. Returns the bin or nullopt.
std::optional<Bin> sorted_single_bin_layout(const std::vector<Task>& tasks, Len slots,
                                            Len capacity);

}  // namespace dbp

#endif  // DBP_SHELF_HPP_
