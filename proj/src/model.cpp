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

#include "dbp/model.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "dbp/errors.hpp"

namespace dbp {

long long total_area(const std::vector<Task>& tasks) {
  __int128 sum = 0;
  for (const Task& t : tasks) sum += t.area();
  if (sum > INT64_MAX) throw std::overflow_error("total task area overflows");
  return static_cast<long long>(sum);
}

long long total_area(const Instance& instance) { return total_area(instance.tasks); }

void validate_instance(const Instance& instance) {
  if (instance.slots < 1) throw DomainError("slot count must be at least 1");
  if (instance.capacity < 1) throw DomainError("capacity must be at least 1");
  if (static_cast<__int128>(instance.slots) * instance.capacity > INT64_MAX) {
    throw DomainError("bin area slots * capacity overflows");
  }
  std::unordered_set<long long> seen;
  for (const Task& t : instance.tasks) {
    if (t.width < 1 || t.width > instance.slots) {
      throw DomainError("task " + std::to_string(t.id) + " has width " +
                        std::to_string(t.width) + " outside [1, " +
                        std::to_string(instance.slots) + "]");
    }
    if (t.height < 1 || t.height > instance.capacity) {
      throw DomainError("task " + std::to_string(t.id) + " has height " +
                        std::to_string(t.height) + " outside [1, " +
                        std::to_string(instance.capacity) + "]");
    }
    if (!seen.insert(t.id).second) {
      throw DomainError("duplicate task id " + std::to_string(t.id));
    }
  }
}

}  // namespace dbp
