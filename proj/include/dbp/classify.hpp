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

#ifndef DBP_CLASSIFY_HPP_
#define DBP_CLASSIFY_HPP_

#include <vector>

#include "dbp/model.hpp"

namespace dbp {

// Tall:  2h > C
// Wide:  2h <= C and 2w > T
// Fat:   2h <= C, 2w <= T, 3h > C, 3w > T
// Small: everything else (3h <= C or 3w <= T, and not tall or wide)
enum class TaskClass { Tall, Wide, Fat, Small };

TaskClass classify_task(const Task& task, Len slots, Len capacity);

struct ClassBuckets {
  std::vector<Task> tall;
  std::vector<Task> wide;
  std::vector<Task> fat;
  std::vector<Task> small;
  long long tall_width = 0;   // sum of widths of tall tasks
  long long wide_height = 0;  // sum of heights of wide tasks
};

ClassBuckets classify_instance(const Instance& instance);

}  // namespace dbp

#endif  // DBP_CLASSIFY_HPP_
