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

#include "dbp/classify.hpp"

namespace dbp {

TaskClass classify_task(const Task& task, Len slots, Len capacity) {
  if (2 * task.height > capacity) return TaskClass::Tall;
  if (2 * task.width > slots) return TaskClass::Wide;
  if (3 * task.height > capacity && 3 * task.width > slots) return TaskClass::Fat;
  return TaskClass::Small;
}

ClassBuckets classify_instance(const Instance& instance) {
  ClassBuckets buckets;
  for (const Task& t : instance.tasks) {
    switch (classify_task(t, instance.slots, instance.capacity)) {
      case TaskClass::Tall:
        buckets.tall.push_back(t);
        buckets.tall_width += t.width;
        break;
      case TaskClass::Wide:
        buckets.wide.push_back(t);
        buckets.wide_height += t.height;
        break;
      case TaskClass::Fat:
        buckets.fat.push_back(t);
        break;
      case TaskClass::Small:
        buckets.small.push_back(t);
        break;
    }
  }
  return buckets;
}

}  // namespace dbp
