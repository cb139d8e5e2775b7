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

#ifndef DBP_MODEL_HPP_
#define DBP_MODEL_HPP_

#include <vector>

namespace dbp {

// All coordinates, widths, heights, loads, and capacities are integral.
// 64 bits because reduction-built instances blow well past 2^32.
using Len = long long;

// A task demanding `height` units of capacity over `width` consecutive slots.
struct Task {
  long long id = 0;
  Len width = 0;
  Len height = 0;

  long long area() const { return static_cast<long long>(width) * height; }
};

// `slots` time slots, numbered 1..slots, each with the same capacity.
struct Instance {
  Len slots = 0;
  Len capacity = 0;
  std::vector<Task> tasks;
};

// A task fixed at a start slot; it occupies [start, start + width - 1].
struct Placement {
  Task task;
  Len start = 0;
};

struct Bin {
  std::vector<Placement> placements;
};

struct Solution {
  std::vector<Bin> bins;
};

long long total_area(const std::vector<Task>& tasks);
long long total_area(const Instance& instance);

// Throws DomainError unless slots >= 1, capacity >= 1, every task has
// 1 <= width <= slots and 1 <= height <= capacity, and ids are unique.
void validate_instance(const Instance& instance);

}  // namespace dbp

#endif  // DBP_MODEL_HPP_
