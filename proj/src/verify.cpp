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

#include "dbp/verify.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace dbp {

namespace {

// First slot in this bin whose load exceeds capacity, via an event sweep.
std::optional<SlotViolation> scan_bin(const Instance& instance, const Bin& bin,
                                      std::size_t bin_index) {
  // events[s] = load delta taking effect at slot s
  std::map<Len, long long> events;
  for (const Placement& p : bin.placements) {
    Len end = p.start + p.task.width - 1;
    if (p.start < 1 || end > instance.slots) {
      return SlotViolation{bin_index, p.start < 1 ? p.start : end, p.task.height};
    }
    events[p.start] += p.task.height;
    events[end + 1] -= p.task.height;
  }
  long long load = 0;
  for (const auto& [slot, delta] : events) {
    load += delta;
    if (slot <= instance.slots && load > instance.capacity) {
      return SlotViolation{bin_index, slot, load};
    }
  }
  return std::nullopt;
}

}  // namespace

VerificationReport verify_solution(const Instance& instance, const Solution& solution) {
  VerificationReport report;
  report.bin_count = solution.bins.size();

  std::unordered_map<long long, const Task*> by_id;
  for (const Task& t : instance.tasks) by_id[t.id] = &t;

  std::unordered_map<long long, int> seen;
  bool shapes_match = true;
  for (const Bin& bin : solution.bins) {
    for (const Placement& p : bin.placements) {
      auto it = by_id.find(p.task.id);
      if (it == by_id.end()) {
        report.unknown_ids.push_back(p.task.id);
        continue;
      }
      if (p.task.width != it->second->width || p.task.height != it->second->height) {
        shapes_match = false;
      }
      if (++seen[p.task.id] == 2) report.duplicate_ids.push_back(p.task.id);
    }
  }
  for (const Task& t : instance.tasks) {
    if (seen.find(t.id) == seen.end()) report.missing_ids.push_back(t.id);
  }
  std::sort(report.missing_ids.begin(), report.missing_ids.end());
  std::sort(report.duplicate_ids.begin(), report.duplicate_ids.end());
  std::sort(report.unknown_ids.begin(), report.unknown_ids.end());
  report.complete = shapes_match && report.missing_ids.empty() &&
                    report.duplicate_ids.empty() && report.unknown_ids.empty();

  report.feasible = true;
  for (std::size_t i = 0; i < solution.bins.size(); ++i) {
    if (auto violation = scan_bin(instance, solution.bins[i], i)) {
      report.feasible = false;
      report.first_violation = violation;
      break;
    }
  }
  return report;
}

long long area_lower_bound(const Instance& instance) {
  long long area = total_area(instance);
  if (area == 0) return 0;
  long long bin_area = static_cast<long long>(instance.slots) * instance.capacity;
  return (area + bin_area - 1) / bin_area;
}

Rat bin_fullness(const Instance& instance, const Bin& bin) {
  long long covered = 0;
  for (const Placement& p : bin.placements) covered += p.task.area();
  return Rat(covered, static_cast<long long>(instance.slots) * instance.capacity);
}

}  // namespace dbp
