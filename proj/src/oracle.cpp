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

#include "dbp/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "dbp/errors.hpp"
#include "dbp/profile.hpp"
#include "dbp/verify.hpp"

namespace dbp {

namespace {

bool search_order_less(const Task& a, const Task& b) {
  if (a.area() != b.area()) return a.area() > b.area();
  if (a.height != b.height) return a.height > b.height;
  return a.id < b.id;
}

std::vector<Task> search_order(const std::vector<Task>& tasks) {
  std::vector<Task> ordered = tasks;
  std::sort(ordered.begin(), ordered.end(), search_order_less);
  return ordered;
}

bool same_shape(const Task& a, const Task& b) {
  return a.width == b.width && a.height == b.height;
}

// Branches on which task starts next; each chosen task goes to its earliest
// feasible start. Every left-shifted schedule arises from some choice order,
// so the search is exhaustive. Anchoring starts to already placed tasks
// instead is NOT exhaustive: interlocked packings exist where a task is
// pinned by one placed after it in any fixed order.
struct SingleBinSearch {
  Len slots;
  Len capacity;
  const std::vector<Task>& tasks;  // in search order
  long long max_nodes;
  long long nodes = 0;
  bool out_of_budget = false;
  LoadProfile profile;
  std::vector<Len> starts;
  std::vector<char> used;
  std::size_t placed = 0;

  SingleBinSearch(Len slot_count, Len cap, const std::vector<Task>& ordered, long long budget)
      : slots(slot_count),
        capacity(cap),
        tasks(ordered),
        max_nodes(budget),
        profile(slot_count),
        starts(ordered.size(), 0),
        used(ordered.size(), 0) {}

  // First start where the task fits the current profile, or 0 if none.
  Len earliest_start(const Task& task) const {
    const Len last = slots - task.width + 1;
    Len s = 1;
    while (s <= last) {
      const Len end = s + task.width - 1;
      if (profile.max_in(s, end) + task.height <= capacity) return s;
      Len blocker = end;
      while (profile.load_at(blocker) + task.height <= capacity) --blocker;
      s = blocker + 1;
    }
    return 0;
  }

  bool dfs() {
    if (placed == tasks.size()) return true;
    if (++nodes > max_nodes) {
      out_of_budget = true;
      return false;
    }
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      if (used[i]) continue;
      // Identically shaped tasks are interchangeable: only the first unused
      // one of each shape may start next.
      bool shadowed = false;
      for (std::size_t j = 0; j < i; ++j) {
        if (!used[j] && same_shape(tasks[j], tasks[i])) {
          shadowed = true;
          break;
        }
      }
      if (shadowed) continue;
      const Len s = earliest_start(tasks[i]);
      // Loads only grow down a branch, so a task with no start now never
      // gets one and the whole branch is dead.
      if (s == 0) return false;
      const Len end = s + tasks[i].width - 1;
      profile.add(s, end, tasks[i].height);
      starts[i] = s;
      used[i] = 1;
      ++placed;
      if (dfs()) return true;
      --placed;
      used[i] = 0;
      profile.add(s, end, -tasks[i].height);
      if (out_of_budget) return false;
    }
    return false;
  }
};

Bin witness_bin(const std::vector<Task>& ordered, const std::vector<Len>& starts) {
  Bin bin;
  bin.placements.reserve(ordered.size());
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    bin.placements.push_back(Placement{ordered[i], starts[i]});
  }
  std::sort(bin.placements.begin(), bin.placements.end(),
            [](const Placement& a, const Placement& b) { return a.task.id < b.task.id; });
  return bin;
}

}  // namespace

FeasibilityOutcome single_bin_feasible(const Instance& instance, const SearchBudget& budget) {
  validate_instance(instance);
  FeasibilityOutcome out;

  __int128 area = 0;
  for (const Task& task : instance.tasks) area += task.area();
  if (area > static_cast<__int128>(instance.slots) * instance.capacity) {
    out.status = SearchStatus::Proven;
    out.feasible = false;
    return out;
  }

  const std::vector<Task> ordered = search_order(instance.tasks);
  SingleBinSearch search(instance.slots, instance.capacity, ordered, budget.max_nodes);
  const bool found = search.dfs();
  out.nodes = search.nodes;
  if (found) {
    out.status = SearchStatus::Proven;
    out.feasible = true;
    out.witness = witness_bin(ordered, search.starts);
  } else if (search.out_of_budget) {
    out.status = SearchStatus::Unknown;
    out.feasible = false;
  } else {
    out.status = SearchStatus::Proven;
    out.feasible = false;
  }
  return out;
}

namespace {

struct AssignSearch {
  const Instance& instance;
  const std::vector<Task>& tasks;  // in search order
  std::size_t limit = 0;           // bins allowed
  std::unordered_map<std::uint64_t, bool>& memo;
  long long max_nodes;
  long long& nodes;
  bool& out_of_budget;

  std::vector<std::uint64_t> bin_mask;
  std::vector<long long> bin_area;
  std::vector<std::size_t> assign;

  AssignSearch(const Instance& inst, const std::vector<Task>& ordered, std::size_t bins,
               std::unordered_map<std::uint64_t, bool>& shared_memo, long long budget,
               long long& node_counter, bool& budget_flag)
      : instance(inst),
        tasks(ordered),
        limit(bins),
        memo(shared_memo),
        max_nodes(budget),
        nodes(node_counter),
        out_of_budget(budget_flag),
        assign(ordered.size(), 0) {}

  bool bin_feasible(std::uint64_t mask) {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    if ((mask & (mask - 1)) == 0) {
      memo.emplace(mask, true);
      return true;
    }
    Instance sub;
    sub.slots = instance.slots;
    sub.capacity = instance.capacity;
    for (std::size_t j = 0; j < tasks.size(); ++j) {
      if (mask & (std::uint64_t{1} << j)) sub.tasks.push_back(tasks[j]);
    }
    const long long remaining = max_nodes - nodes;
    if (remaining <= 0) {
      out_of_budget = true;
      return false;
    }
    const FeasibilityOutcome result = single_bin_feasible(sub, SearchBudget{remaining});
    nodes += result.nodes;
    if (result.status == SearchStatus::Unknown) {
      out_of_budget = true;
      return false;
    }
    memo.emplace(mask, result.feasible);
    return result.feasible;
  }

  bool dfs(std::size_t i) {
    if (i == tasks.size()) return true;
    if (++nodes > max_nodes) {
      out_of_budget = true;
      return false;
    }
    // Identically shaped tasks get non-decreasing bin indices, and a new bin
    // is only ever the one right after the last opened bin.
    std::size_t floor_bin = 0;
    if (i > 0 && same_shape(tasks[i], tasks[i - 1])) floor_bin = assign[i - 1];
    const std::size_t opened = bin_mask.size();
    const std::size_t top = std::min(opened + 1, limit);
    for (std::size_t b = floor_bin; b < top; ++b) {
      const bool fresh = (b == opened);
      if (fresh) {
        bin_mask.push_back(0);
        bin_area.push_back(0);
      }
      const __int128 next_area = static_cast<__int128>(bin_area[b]) + tasks[i].area();
      if (next_area <= static_cast<__int128>(instance.slots) * instance.capacity) {
        const std::uint64_t next_mask = bin_mask[b] | (std::uint64_t{1} << i);
        if (bin_feasible(next_mask)) {
          const std::uint64_t kept_mask = bin_mask[b];
          const long long kept_area = bin_area[b];
          bin_mask[b] = next_mask;
          bin_area[b] = static_cast<long long>(next_area);
          assign[i] = b;
          if (dfs(i + 1)) return true;
          bin_mask[b] = kept_mask;
          bin_area[b] = kept_area;
        }
      }
      if (fresh) {
        bin_mask.pop_back();
        bin_area.pop_back();
      }
      if (out_of_budget) return false;
    }
    return false;
  }
};

}  // namespace

OptOutcome exact_demand_bp(const Instance& instance, const SearchBudget& budget) {
  validate_instance(instance);
  const std::size_t n = instance.tasks.size();
  if (n > 64) {
    throw DomainError("exact bin packing search supports at most 64 tasks, got " +
                      std::to_string(n));
  }

  OptOutcome out;
  if (n == 0) {
    out.status = SearchStatus::Proven;
    out.bin_count = 0;
    out.solution = Solution{};
    return out;
  }

  const std::vector<Task> ordered = search_order(instance.tasks);
  std::unordered_map<std::uint64_t, bool> memo;
  long long nodes = 0;
  bool out_of_budget = false;

  const long long lb = area_lower_bound(instance);
  const std::size_t first = static_cast<std::size_t>(std::max<long long>(1, lb));

  for (std::size_t m = first; m <= n; ++m) {
    AssignSearch search(instance, ordered, m, memo, budget.max_nodes, nodes, out_of_budget);
    const bool found = search.dfs(0);
    if (found) {
      out.status = SearchStatus::Proven;
      out.bin_count = m;
      Solution solution;
      solution.bins.resize(search.bin_mask.size());
      for (std::size_t b = 0; b < search.bin_mask.size(); ++b) {
        Instance sub;
        sub.slots = instance.slots;
        sub.capacity = instance.capacity;
        for (std::size_t j = 0; j < ordered.size(); ++j) {
          if (search.assign[j] == b) sub.tasks.push_back(ordered[j]);
        }
        const FeasibilityOutcome check = single_bin_feasible(sub, budget);
        nodes += check.nodes;
        if (!check.feasible || !check.witness) {
          throw std::logic_error("bin accepted during search but its layout disappeared");
        }
        solution.bins[b] = *check.witness;
      }
      out.solution = std::move(solution);
      out.nodes = nodes;
      return out;
    }
    if (out_of_budget) {
      out.status = SearchStatus::Unknown;
      out.bin_count = 0;
      out.nodes = nodes;
      return out;
    }
  }
  // Unreachable: n singleton bins always work for a validated instance.
  throw std::logic_error("no assignment found even with one bin per task");
}

namespace {

struct GeoSearch {
  Len width;
  Len height;
  const std::vector<Task>& rects;  // in search order
  long long max_nodes;
  long long nodes = 0;
  bool out_of_budget = false;
  bool diagonal_cut = false;

  std::vector<char> occupied;
  std::vector<Len> xs;
  std::vector<Len> ys;
  std::vector<long long> rem_area;                       // suffix sums
  std::vector<std::vector<std::pair<Len, Len>>> dims;    // distinct dims per suffix
  std::vector<Len> run_h;
  std::vector<Len> run_v;
  long long free_cells = 0;

  GeoSearch(Len w, Len h, const std::vector<Task>& ordered, long long budget)
      : width(w), height(h), rects(ordered), max_nodes(budget) {
    occupied.assign(static_cast<std::size_t>(width * height), 0);
    xs.resize(rects.size());
    ys.resize(rects.size());
    run_h.resize(occupied.size());
    run_v.resize(occupied.size());
    free_cells = static_cast<long long>(width) * height;
    const std::size_t n = rects.size();
    rem_area.assign(n + 1, 0);
    dims.assign(n + 1, {});
    for (std::size_t i = n; i-- > 0;) {
      rem_area[i] = rem_area[i + 1] + rects[i].area();
      dims[i] = dims[i + 1];
      std::pair<Len, Len> d{rects[i].width, rects[i].height};
      if (std::find(dims[i].begin(), dims[i].end(), d) == dims[i].end()) dims[i].push_back(d);
    }
  }

  std::size_t cell(Len x, Len y) const { return static_cast<std::size_t>(x + y * width); }

  bool fits(Len x, Len y, Len w, Len h) const {
    for (Len yy = y; yy < y + h; ++yy) {
      const std::size_t row = cell(0, yy);
      for (Len xx = x; xx < x + w; ++xx) {
        if (occupied[row + static_cast<std::size_t>(xx)]) return false;
      }
    }
    return true;
  }

  void paint(Len x, Len y, Len w, Len h, char value) {
    for (Len yy = y; yy < y + h; ++yy) {
      const std::size_t row = cell(0, yy);
      for (Len xx = x; xx < x + w; ++xx) {
        occupied[row + static_cast<std::size_t>(xx)] = value;
      }
    }
    free_cells += (value ? -1 : 1) * static_cast<long long>(w) * h;
  }

  // Counts the free cells some remaining rectangle could still cover. A cell
  // is only coverable by a rectangle no wider than the free horizontal run
  // through the cell and no taller than the free vertical run.
  bool enough_room(std::size_t next) {
    if (next >= rects.size()) return true;
    for (Len y = 0; y < height; ++y) {
      Len x = 0;
      while (x < width) {
        if (occupied[cell(x, y)]) {
          ++x;
          continue;
        }
        Len end = x;
        while (end < width && !occupied[cell(end, y)]) ++end;
        for (Len xx = x; xx < end; ++xx) run_h[cell(xx, y)] = end - x;
        x = end;
      }
    }
    for (Len x = 0; x < width; ++x) {
      Len y = 0;
      while (y < height) {
        if (occupied[cell(x, y)]) {
          ++y;
          continue;
        }
        Len end = y;
        while (end < height && !occupied[cell(x, end)]) ++end;
        for (Len yy = y; yy < end; ++yy) run_v[cell(x, yy)] = end - y;
        y = end;
      }
    }
    long long usable = 0;
    const auto& remaining = dims[next];
    for (Len y = 0; y < height; ++y) {
      for (Len x = 0; x < width; ++x) {
        const std::size_t c = cell(x, y);
        if (occupied[c]) continue;
        for (const auto& d : remaining) {
          if (d.first <= run_h[c] && d.second <= run_v[c]) {
            ++usable;
            break;
          }
        }
      }
    }
    return usable >= rem_area[next];
  }

  bool dfs(std::size_t i) {
    if (i == rects.size()) return true;
    if (!enough_room(i)) return false;
    const Task& r = rects[i];
    const Len w = r.width;
    const Len h = r.height;
    Len x_last = width - w;
    Len y_last = height - h;
    // The box can be mirrored in either axis, so pin the first rectangle to
    // the lower-left quadrant of its position range.
    if (i == 0) {
      x_last = (width - w) / 2;
      y_last = (height - h) / 2;
    }
    const bool lex_after_prev = i > 0 && same_shape(r, rects[i - 1]);
    const Len x_first = lex_after_prev ? xs[i - 1] : 0;
    for (Len x = x_first; x <= x_last; ++x) {
      Len y_first = (lex_after_prev && x == xs[i - 1]) ? ys[i - 1] : 0;
      Len y_top = y_last;
      if (i == 0 && diagonal_cut) y_top = std::min(y_top, x);
      for (Len y = y_first; y <= y_top; ++y) {
        if (++nodes > max_nodes) {
          out_of_budget = true;
          return false;
        }
        if (!fits(x, y, w, h)) continue;
        paint(x, y, w, h, 1);
        xs[i] = x;
        ys[i] = y;
        if (dfs(i + 1)) return true;
        paint(x, y, w, h, 0);
        if (out_of_budget) return false;
      }
    }
    return false;
  }
};

}  // namespace

GeometricOutcome geometric_feasible(const std::vector<Task>& rects, Len width, Len height,
                                    const SearchBudget& budget) {
  if (width < 1 || height < 1) throw DomainError("box sides must be at least 1");
  for (const Task& r : rects) {
    if (r.width < 1 || r.height < 1) {
      throw DomainError("rectangle " + std::to_string(r.id) + " has a side below 1");
    }
  }
  constexpr long long kMaxCells = 4'000'000;
  if (static_cast<__int128>(width) * height > kMaxCells) {
    throw DomainError("box needs more than " + std::to_string(kMaxCells) +
                      " grid cells; the exact geometric search is desk scale only");
  }

  GeometricOutcome out;
  __int128 area = 0;
  bool oversize = false;
  for (const Task& r : rects) {
    area += r.area();
    if (r.width > width || r.height > height) oversize = true;
  }
  if (oversize || area > static_cast<__int128>(width) * height) {
    out.status = SearchStatus::Proven;
    out.feasible = false;
    return out;
  }

  const std::vector<Task> ordered = search_order(rects);
  GeoSearch search(width, height, ordered, budget.max_nodes);
  // Transposing the box is a symmetry too, but only when everything in it is
  // its own transpose and the first rectangle has no identical twin to trade
  // places with.
  const bool all_squares =
      std::all_of(ordered.begin(), ordered.end(), [](const Task& r) { return r.width == r.height; });
  search.diagonal_cut = all_squares && width == height &&
                        !(ordered.size() >= 2 && same_shape(ordered[0], ordered[1]));

  const bool found = search.dfs(0);
  out.nodes = search.nodes;
  if (found) {
    out.status = SearchStatus::Proven;
    out.feasible = true;
    std::vector<GeoPlacement> witness;
    witness.reserve(ordered.size());
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      witness.push_back(GeoPlacement{ordered[i], search.xs[i], search.ys[i]});
    }
    std::stable_sort(witness.begin(), witness.end(),
                     [](const GeoPlacement& a, const GeoPlacement& b) { return a.task.id < b.task.id; });
    out.witness = std::move(witness);
  } else if (search.out_of_budget) {
    out.status = SearchStatus::Unknown;
  } else {
    out.status = SearchStatus::Proven;
    out.feasible = false;
  }
  return out;
}

}  // namespace dbp
