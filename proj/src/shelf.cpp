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

#include "dbp/shelf.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dbp/errors.hpp"
#include "dbp/profile.hpp"

namespace dbp {

namespace {

void sort_nfdh(std::vector<Task>& tasks) {
  std::sort(tasks.begin(), tasks.end(), [](const Task& a, const Task& b) {
    if (a.height != b.height) return a.height > b.height;
    if (a.width != b.width) return a.width > b.width;
    return a.id < b.id;
  });
}

void check_fits_bin(const Task& t, Len slots, Len capacity) {
  if (t.width > slots || t.height > capacity || t.width < 1 || t.height < 1) {
    throw DomainError("task " + std::to_string(t.id) + " (" + std::to_string(t.width) +
                      "x" + std::to_string(t.height) + ") cannot fit a " +
                      std::to_string(slots) + "x" + std::to_string(capacity) + " bin");
  }
}

}  // namespace

std::vector<Bin> nfdh(std::vector<Task> tasks, Len slots, Len capacity) {
  for (const Task& t : tasks) check_fits_bin(t, slots, capacity);
  sort_nfdh(tasks);

  std::vector<Bin> bins;
  long long used_height = 0;   // committed shelf heights in the open bin
  long long shelf_height = 0;  // height of the open shelf (its first task)
  Len next_slot = 0;           // first free slot on the open shelf; 0 = none open

  for (const Task& t : tasks) {
    bool shelf_open = next_slot != 0;
    if (shelf_open && next_slot + t.width - 1 <= slots) {
      bins.back().placements.push_back({t, next_slot});
      next_slot += t.width;
      continue;
    }
    // New shelf; heights are non-increasing so the task fits under any shelf.
    if (shelf_open) used_height += shelf_height;
    if (!shelf_open || used_height + t.height > capacity) {
      bins.emplace_back();
      used_height = 0;
    }
    shelf_height = t.height;
    bins.back().placements.push_back({t, 1});
    next_slot = 1 + t.width;
  }
  return bins;
}

Bin stack_sorted(std::vector<Task> tasks, Len slots, Len capacity) {
  long long stack = 0;
  for (const Task& t : tasks) {
    check_fits_bin(t, slots, capacity);
    stack += t.height;
  }
  if (stack > capacity) {
    throw DomainError("stacked heights reach " + std::to_string(stack) +
                      " over capacity " + std::to_string(capacity));
  }
  std::sort(tasks.begin(), tasks.end(), [](const Task& a, const Task& b) {
    if (a.width != b.width) return a.width > b.width;
    if (a.height != b.height) return a.height > b.height;
    return a.id < b.id;
  });
  Bin bin;
  for (const Task& t : tasks) bin.placements.push_back({t, 1});
  return bin;
}

std::optional<Bin> sorted_single_bin_layout(const std::vector<Task>& tasks, Len slots,
                                            Len capacity) {
  if (tasks.empty()) return Bin{};
  for (const Task& t : tasks) {
    if (t.width > slots || t.height > capacity) return std::nullopt;
  }

  long long stack = 0;
  for (const Task& t : tasks) stack += t.height;
  if (stack <= capacity) return stack_sorted(tasks, slots, capacity);

  std::vector<Bin> shelves = nfdh(tasks, slots, capacity);
  if (shelves.size() == 1) return shelves[0];

  if (tasks.size() > 5) return std::nullopt;
  // Two stacked columns side by side; put the wider column first and accept
  // only layouts whose combined profile is non-increasing.
  const std::size_t n = tasks.size();
  Instance probe{slots, capacity, {}};
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<Task> left, right;
    for (std::size_t i = 0; i < n; ++i) {
      (mask >> i & 1 ? left : right).push_back(tasks[i]);
    }
    Len left_w = 0, right_w = 0;
    long long left_h = 0, right_h = 0;
    for (const Task& t : left) {
      left_w = std::max(left_w, t.width);
      left_h += t.height;
    }
    for (const Task& t : right) {
      right_w = std::max(right_w, t.width);
      right_h += t.height;
    }
    if (left_w < right_w) continue;  // the mirrored mask covers it
    if (left_h > capacity || right_h > capacity || left_w + right_w > slots) continue;
    Bin bin;
    for (const Task& t : left) bin.placements.push_back({t, 1});
    for (const Task& t : right) bin.placements.push_back({t, left_w + 1});
    if (is_sorted_profile(load_profile(probe, bin))) return bin;
  }
  return std::nullopt;
}

}  // namespace dbp
