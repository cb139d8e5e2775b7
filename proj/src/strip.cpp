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

#include "dbp/strip.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dbp/errors.hpp"

namespace dbp {

namespace {

bool y_overlap(const StripItem& a, const StripItem& b) {
  return a.offset < b.offset + b.task.height && b.offset < a.offset + a.task.height;
}

}  // namespace

std::optional<StripLayout> two_pile_strip(std::vector<Task> tasks, long long budget,
                                          Len slots) {
  if (budget < 1) throw DomainError("strip budget must be positive");
  std::sort(tasks.begin(), tasks.end(), [](const Task& a, const Task& b) {
    if (a.width != b.width) return a.width > b.width;
    return a.id < b.id;
  });

  StripLayout layout;
  layout.budget = budget;
  layout.slots = slots;

  std::size_t i = 0;
  long long cum = 0;
  for (; i < tasks.size(); ++i) {
    if (cum + tasks[i].height > budget) break;
    layout.left.push_back({tasks[i], cum});
    cum += tasks[i].height;
  }
  if (i < tasks.size()) {
    layout.dropped = tasks[i];
    long long rcum = 0;
    for (std::size_t j = i + 1; j < tasks.size(); ++j) {
      rcum += tasks[j].height;
      if (rcum > budget) return std::nullopt;
      layout.right.push_back({tasks[j], budget - rcum});
    }
  }

  for (const StripItem& l : layout.left) {
    for (const StripItem& r : layout.right) {
      if (y_overlap(l, r) && l.task.width + r.task.width > slots) return std::nullopt;
    }
  }
  return layout;
}

StructuredSolution cut_strip(const StripLayout& layout, Len capacity) {
  if (capacity < 1) throw DomainError("capacity must be positive");
  if (layout.budget % capacity != 0) {
    throw DomainError("strip budget " + std::to_string(layout.budget) +
                      " is not a multiple of the capacity");
  }
  const long long g = layout.budget / capacity;
  const Len T = layout.slots;

  // A task crosses the cut at m * capacity when that line is strictly inside
  // its height range. Tasks here are at most one capacity tall, so each task
  // crosses at most one cut.
  auto cut_crossed = [&](const StripItem& item) -> long long {
    long long m = item.offset / capacity + 1;
    if (m <= g - 1 && m * capacity < item.offset + item.task.height) {
      if (item.offset + item.task.height > (m + 1) * capacity) {
        throw DomainError("task " + std::to_string(item.task.id) +
                          " spans more than one cut");
      }
      return m;
    }
    return 0;
  };

  std::vector<std::vector<Task>> cross(static_cast<std::size_t>(g));  // by cut index
  std::vector<std::vector<Task>> left_in(static_cast<std::size_t>(g));
  std::vector<std::vector<const StripItem*>> right_items(static_cast<std::size_t>(g));
  long long right_bottom = layout.budget;

  for (const StripItem& item : layout.left) {
    if (long long m = cut_crossed(item)) {
      cross[static_cast<std::size_t>(m)].push_back(item.task);
    } else {
      left_in[static_cast<std::size_t>(item.offset / capacity)].push_back(item.task);
    }
  }
  for (const StripItem& item : layout.right) {
    right_bottom = std::min(right_bottom, item.offset);
    if (long long m = cut_crossed(item)) {
      cross[static_cast<std::size_t>(m)].push_back(item.task);
    } else {
      right_items[static_cast<std::size_t>(item.offset / capacity)].push_back(&item);
    }
  }

  // The band holding the lower end of the right pile, when that end is
  // strictly inside a band.
  long long partial_band = -1;
  if (!layout.right.empty() && right_bottom % capacity != 0) {
    partial_band = right_bottom / capacity;
  }

  StructuredSolution out;
  out.k = Rat(2);
  bool dropped_pending = layout.dropped.has_value();

  auto emit = [&](Bin bin, BinTag tag) {
    out.solution.bins.push_back(std::move(bin));
    out.tags.push_back(tag);
  };

  // Shelf bins: nine cuts' worth of crossers each, each cut's tasks side by
  // side with the taller one first.
  {
    Bin shelf;
    int cuts_in_shelf = 0;
    for (long long m = 1; m <= g - 1; ++m) {
      auto& pair = cross[static_cast<std::size_t>(m)];
      if (pair.empty()) continue;
      if (cuts_in_shelf == 9) {
        emit(std::move(shelf), BinTag::sorted_profile());
        shelf = Bin{};
        cuts_in_shelf = 0;
      }
      std::sort(pair.begin(), pair.end(), [](const Task& a, const Task& b) {
        if (a.height != b.height) return a.height > b.height;
        if (a.width != b.width) return a.width > b.width;
        return a.id < b.id;
      });
      Len at = 1;
      for (const Task& t : pair) {
        shelf.placements.push_back({t, at});
        at += t.width;
      }
      ++cuts_in_shelf;
    }
    if (!shelf.placements.empty()) emit(std::move(shelf), BinTag::sorted_profile());
  }

  // Band bins, bottom to top.
  for (long long b = 0; b < g; ++b) {
    auto& lefts = left_in[static_cast<std::size_t>(b)];
    auto& rights = right_items[static_cast<std::size_t>(b)];
    std::sort(lefts.begin(), lefts.end(),
              [](const Task& a, const Task& b2) { return a.id < b2.id; });
    std::sort(rights.begin(), rights.end(),
              [](const StripItem* a, const StripItem* b2) { return a->task.id < b2->task.id; });

    if (rights.empty()) {
      if (lefts.empty()) continue;
      Bin bin;
      for (const Task& t : lefts) bin.placements.push_back({t, 1});
      emit(std::move(bin), BinTag::sorted_profile());
      continue;
    }

    long long rights_height = 0;
    for (const StripItem* r : rights) rights_height += r->task.height;

    // In the band where the right pile bottoms out, a thin right remainder
    // joins the dropped task in a stack instead of padding the band's area.
    if (b == partial_band && 9 * rights_height < 7 * capacity && dropped_pending) {
      if (!lefts.empty()) {
        Bin bin;
        for (const Task& t : lefts) bin.placements.push_back({t, 1});
        emit(std::move(bin), BinTag::sorted_profile());
      }
      Bin stack;
      stack.placements.push_back({*layout.dropped, 1});
      for (const StripItem* r : rights) stack.placements.push_back({r->task, 1});
      emit(std::move(stack), BinTag::sorted_profile());
      dropped_pending = false;
      continue;
    }

    Bin bin;
    for (const Task& t : lefts) bin.placements.push_back({t, 1});
    for (const StripItem* r : rights) {
      bin.placements.push_back({r->task, T - r->task.width + 1});
    }
    emit(std::move(bin), BinTag::alpha_full(Rat(1, 2)));
  }

  if (dropped_pending) {
    Bin bin;
    bin.placements.push_back({*layout.dropped, 1});
    emit(std::move(bin), BinTag::sorted_profile());
  }

  if (static_cast<long long>(out.solution.bins.size()) > 2 * g) {
    throw std::logic_error("strip cutting produced " +
                           std::to_string(out.solution.bins.size()) + " bins for " +
                           std::to_string(g) + " cuts");
  }
  return out;
}

}  // namespace dbp
