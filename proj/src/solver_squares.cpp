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

#include "dbp/solver_squares.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "dbp/bp1d.hpp"
#include "dbp/errors.hpp"
#include "dbp/first_fit.hpp"
#include "dbp/oracle.hpp"
#include "dbp/profile.hpp"
#include "dbp/rational.hpp"
#include "dbp/shelf.hpp"
#include "dbp/strip.hpp"
#include "dbp/structured.hpp"
#include "dbp/verify.hpp"

namespace dbp {
namespace {

using Wide = __int128;

// Guesses up to this bound go through the exact assignment search in the
// near-square cases; larger guesses use the leftmost-fit construction.
constexpr std::size_t kGuessCut = 55;

void require_squares(const Instance& instance) {
  for (const Task& t : instance.tasks) {
    if (t.width != t.height) {
      throw DomainError("task " + std::to_string(t.id) + " is not square");
    }
  }
}

std::vector<Task> by_side_desc(std::vector<Task> tasks) {
  std::sort(tasks.begin(), tasks.end(), [](const Task& a, const Task& b) {
    if (a.width != b.width) return a.width > b.width;
    return a.id < b.id;
  });
  return tasks;
}

Wide square_area(const std::vector<Task>& tasks) {
  Wide area = 0;
  for (const Task& t : tasks) area += Wide(t.width) * t.height;
  return area;
}

// Smallest start where the task fits under the capacity, 0 if none.
Len earliest_start(const LoadProfile& profile, const Task& task, Len slots, Len capacity) {
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

// Global leftmost fit: each square lands at the smallest feasible start over
// all open bins, lowest bin index on ties. The one-or-four opening check is
// meaningful only for square bins and runs only when requested.
std::vector<Bin> leftmost_fit(std::vector<Task> squares, Len slots, Len capacity,
                              bool check_one_or_four) {
  squares = by_side_desc(std::move(squares));
  struct OpenBin {
    Bin bin;
    LoadProfile profile;
  };
  std::vector<OpenBin> open;
  for (const Task& t : squares) {
    std::size_t best_bin = 0;
    Len best_start = 0;
    for (std::size_t b = 0; b < open.size(); ++b) {
      const Len s = earliest_start(open[b].profile, t, slots, capacity);
      if (s != 0 && (best_start == 0 || s < best_start)) {
        best_start = s;
        best_bin = b;
      }
    }
    if (best_start == 0) {
      if (check_one_or_four) {
        for (const OpenBin& b : open) {
          const std::size_t count = b.bin.placements.size();
          if (count != 1 && count != 4) {
            throw std::logic_error("leftmost fit opened a bin while another holds " +
                                   std::to_string(count) + " squares");
          }
        }
      }
      open.push_back(OpenBin{Bin{}, LoadProfile(slots)});
      best_bin = open.size() - 1;
      best_start = 1;
    }
    open[best_bin].bin.placements.push_back({t, best_start});
    open[best_bin].profile.add(best_start, best_start + t.width - 1, t.height);
  }
  std::vector<Bin> bins;
  bins.reserve(open.size());
  for (OpenBin& b : open) bins.push_back(std::move(b.bin));
  return bins;
}

Bin reshelve_one_bin(const std::vector<Task>& tasks, Len slots, Len capacity) {
  std::vector<Bin> bins = nfdh(tasks, slots, capacity);
  if (bins.size() != 1) {
    throw std::logic_error("a leftmost bin did not re-shelve into one bin");
  }
  return std::move(bins[0]);
}

// Wide bins (3T >= 4C): the big squares ride a horizontal strip of width
// g*T, bottom row left to right and top row right to left, one square
// possibly dropped. Cutting at multiples of T gives g regions; each region
// yields up to two shelved bins, pairing residents of one row with the
// square of the other row crossing the matching region edge. The dropped
// square counts as crossing the rightmost edge.
std::optional<StructuredSolution> build_wide_regions(const Instance& ins,
                                                     const std::vector<Task>& big,
                                                     std::size_t guess) {
  if (ins.slots > std::numeric_limits<long long>::max() / static_cast<long long>(guess)) {
    throw std::overflow_error("strip budget overflows for guess " + std::to_string(guess));
  }
  const long long budget = ins.slots * static_cast<long long>(guess);
  std::optional<StripLayout> layout = two_pile_strip(big, budget, ins.capacity);
  if (!layout) return std::nullopt;

  StructuredSolution structured;
  structured.k = Rat(2);
  for (std::size_t r = 1; r <= guess; ++r) {
    const long long lo = static_cast<long long>(r - 1) * ins.slots;
    const long long hi = static_cast<long long>(r) * ins.slots;
    std::vector<Task> with_lower, with_upper;
    for (const StripItem& item : layout->left) {
      const long long end = item.offset + item.task.height;
      if (item.offset >= lo && end <= hi) with_lower.push_back(item.task);
      else if (item.offset < hi && end > hi) with_upper.push_back(item.task);
    }
    for (const StripItem& item : layout->right) {
      const long long end = item.offset + item.task.height;
      if (item.offset >= lo && end <= hi) with_upper.push_back(item.task);
      else if (item.offset < lo && end > lo) with_lower.push_back(item.task);
    }
    if (r == guess && layout->dropped) with_upper.push_back(*layout->dropped);
    for (std::vector<Task>* part : {&with_lower, &with_upper}) {
      if (part->empty()) continue;
      std::vector<Bin> bins = nfdh(*part, ins.slots, ins.capacity);
      if (bins.size() != 1) return std::nullopt;
      structured.solution.bins.push_back(std::move(bins[0]));
      structured.tags.push_back(BinTag::sorted_profile());
    }
  }
  return structured;
}

// Tall bins (4T <= 3C): the big squares ride the vertical strip of height
// g*C. Per region, left-pile residents stack at slot 1 with the right-pile
// square crossing the lower edge placed beside them; right-pile residents
// are shelved together with the left-pile square crossing the upper edge
// (the dropped square counts as crossing the topmost edge).
std::optional<StructuredSolution> build_tall_regions(const Instance& ins,
                                                     const std::vector<Task>& big,
                                                     std::size_t guess) {
  if (ins.capacity > std::numeric_limits<long long>::max() / static_cast<long long>(guess)) {
    throw std::overflow_error("strip budget overflows for guess " + std::to_string(guess));
  }
  const long long budget = ins.capacity * static_cast<long long>(guess);
  std::optional<StripLayout> layout = two_pile_strip(big, budget, ins.slots);
  if (!layout) return std::nullopt;

  StructuredSolution structured;
  structured.k = Rat(2);
  for (std::size_t r = 1; r <= guess; ++r) {
    const long long lo = static_cast<long long>(r - 1) * ins.capacity;
    const long long hi = static_cast<long long>(r) * ins.capacity;
    std::vector<Task> stack, shelf;
    std::optional<Task> beside;
    for (const StripItem& item : layout->left) {
      const long long end = item.offset + item.task.height;
      if (item.offset >= lo && end <= hi) stack.push_back(item.task);
      else if (item.offset < hi && end > hi) shelf.push_back(item.task);
    }
    for (const StripItem& item : layout->right) {
      const long long end = item.offset + item.task.height;
      if (item.offset >= lo && end <= hi) shelf.push_back(item.task);
      else if (item.offset < lo && end > lo) beside = item.task;
    }
    if (r == guess && layout->dropped) shelf.push_back(*layout->dropped);
    if (!stack.empty() || beside) {
      Bin bin;
      Len widest = 0;
      long long total = 0;
      for (const Task& t : stack) {
        bin.placements.push_back({t, 1});
        widest = std::max(widest, t.width);
        total += t.height;
      }
      if (total > ins.capacity) return std::nullopt;
      if (beside) {
        if (widest + beside->width > ins.slots) return std::nullopt;
        bin.placements.push_back({*beside, widest + 1});
      }
      structured.solution.bins.push_back(std::move(bin));
      structured.tags.push_back(BinTag::sorted_profile());
    }
    if (!shelf.empty()) {
      std::vector<Bin> bins = nfdh(shelf, ins.slots, ins.capacity);
      if (bins.size() != 1) return std::nullopt;
      structured.solution.bins.push_back(std::move(bins[0]));
      structured.tags.push_back(BinTag::sorted_profile());
    }
  }
  return structured;
}

// Assignment of big squares into at most `limit` bins, each bin checked for
// single-bin feasibility. Bins are interchangeable, so a square only ever
// opens the next fresh bin, and equal-sided squares are assigned in
// non-decreasing bin order.
struct BigAssign {
  const Instance& ins;
  std::vector<Task> tasks;
  std::size_t limit = 0;
  long long node_budget = 2'000'000;
  long long nodes = 0;
  std::size_t opened = 0;
  std::vector<std::vector<Task>> bins;
  std::vector<Wide> areas;
  std::vector<std::size_t> chosen;
  std::map<std::vector<Len>, bool> feasible_memo;

  explicit BigAssign(const Instance& instance) : ins(instance) {}

  bool cohabit_ok(std::size_t b, const Task& t) {
    if (bins[b].size() >= 9) return false;
    if (areas[b] + Wide(t.width) * t.height > Wide(ins.slots) * ins.capacity) return false;
    std::vector<Len> key;
    key.reserve(bins[b].size() + 1);
    for (const Task& u : bins[b]) key.push_back(u.width);
    key.push_back(t.width);
    std::sort(key.begin(), key.end());
    const auto it = feasible_memo.find(key);
    if (it != feasible_memo.end()) return it->second;
    Instance sub;
    sub.slots = ins.slots;
    sub.capacity = ins.capacity;
    sub.tasks = bins[b];
    sub.tasks.push_back(t);
    const FeasibilityOutcome probe = single_bin_feasible(sub);
    const bool ok = probe.status == SearchStatus::Proven && probe.feasible;
    if (probe.status == SearchStatus::Proven) feasible_memo[key] = ok;
    return ok;
  }

  bool dfs(std::size_t i) {
    if (i == tasks.size()) return true;
    if (++nodes > node_budget) return false;
    std::size_t floor = 0;
    if (i > 0 && tasks[i].width == tasks[i - 1].width) floor = chosen[i - 1];
    const std::size_t top = std::min(opened + 1, limit);
    for (std::size_t b = floor; b < top; ++b) {
      const bool fresh = b == opened;
      if (fresh) {
        bins.emplace_back();
        areas.push_back(0);
        ++opened;
      }
      if (cohabit_ok(b, tasks[i])) {
        bins[b].push_back(tasks[i]);
        areas[b] += Wide(tasks[i].width) * tasks[i].height;
        chosen[i] = b;
        if (dfs(i + 1)) return true;
        bins[b].pop_back();
        areas[b] -= Wide(tasks[i].width) * tasks[i].height;
      }
      if (fresh) {
        bins.pop_back();
        areas.pop_back();
        --opened;
      }
      if (nodes > node_budget) return false;
    }
    return false;
  }
};

// Near-square cases with few bins: big squares are placed by exhaustive
// assignment; half-full bins keep their packed layout, the rest re-shelve
// into at most two bins each.
std::optional<StructuredSolution> build_near_exact(const Instance& ins,
                                                   const std::vector<Task>& big,
                                                   std::size_t guess) {
  if (big.size() > 9 * guess) return std::nullopt;
  BigAssign search(ins);
  search.tasks = by_side_desc(big);
  search.limit = guess;
  search.chosen.assign(search.tasks.size(), 0);
  if (!search.dfs(0)) return std::nullopt;

  StructuredSolution structured;
  structured.k = Rat(2);
  const Wide full = Wide(ins.slots) * ins.capacity;
  for (const std::vector<Task>& group : search.bins) {
    if (group.empty()) continue;
    if (2 * square_area(group) >= full) {
      Instance sub;
      sub.slots = ins.slots;
      sub.capacity = ins.capacity;
      sub.tasks = group;
      FeasibilityOutcome probe = single_bin_feasible(sub);
      if (probe.status != SearchStatus::Proven || !probe.feasible || !probe.witness) {
        throw std::logic_error("a bin accepted during assignment lost its layout");
      }
      structured.solution.bins.push_back(std::move(*probe.witness));
      structured.tags.push_back(BinTag::alpha_full(Rat(1, 2)));
    } else {
      std::vector<Bin> shelved = nfdh(group, ins.slots, ins.capacity);
      if (shelved.size() > 2) return std::nullopt;
      for (Bin& b : shelved) {
        structured.solution.bins.push_back(std::move(b));
        structured.tags.push_back(BinTag::sorted_profile());
      }
    }
  }
  return structured;
}

struct StructuredBuild {
  StructuredSolution structured;
  std::string interval_method;
};

// Near-square cases with many bins. Sides above a third of the long axis go
// through leftmost fit; each of those bins is re-laid with a sorted profile
// when possible, kept as half-full otherwise, or split one square per bin as
// a last resort. Sides in the quarter-to-third band become a one-dimensional
// bin packing: its groups turn into stacks placed at the three interval
// offsets (wide bins) or into rows laid shelf-style (tall bins), three
// groups per bin.
StructuredBuild build_near_relaxed(const Instance& ins, const std::vector<Task>& big,
                                   bool wide) {
  const Len axis = wide ? ins.slots : ins.capacity;
  std::vector<Task> giants, mids;
  for (const Task& t : big) {
    (Wide(3) * t.width > axis ? giants : mids).push_back(t);
  }

  StructuredBuild out;
  out.structured.k = Rat(2);
  const Wide full = Wide(ins.slots) * ins.capacity;

  for (const Bin& bin : leftmost_fit(giants, ins.slots, ins.capacity, false)) {
    std::vector<Task> tasks;
    tasks.reserve(bin.placements.size());
    for (const Placement& p : bin.placements) tasks.push_back(p.task);
    if (std::optional<Bin> sorted = sorted_single_bin_layout(tasks, ins.slots, ins.capacity)) {
      out.structured.solution.bins.push_back(std::move(*sorted));
      out.structured.tags.push_back(BinTag::sorted_profile());
    } else if (2 * square_area(tasks) >= full) {
      out.structured.solution.bins.push_back(bin);
      out.structured.tags.push_back(BinTag::alpha_full(Rat(1, 2)));
    } else {
      for (const Task& t : tasks) {
        Bin single;
        single.placements.push_back({t, 1});
        out.structured.solution.bins.push_back(std::move(single));
        out.structured.tags.push_back(BinTag::sorted_profile());
      }
    }
  }

  if (mids.empty()) return out;

  const std::vector<Task> order = by_side_desc(mids);
  std::vector<Rat> sizes;
  sizes.reserve(order.size());
  for (const Task& t : order) sizes.push_back(Rat(t.width));
  const Rat cap = Rat(wide ? ins.capacity : ins.slots);
  Groups groups;
  if (order.size() <= 24) {
    ExactBpResult packed = exact_bp(sizes, cap);
    groups = std::move(packed.groups);
    out.interval_method =
        packed.status == SearchStatus::Proven ? "exact" : "branch-and-bound-budget";
  } else if (order.size() <= 5000) {
    groups = ffd(sizes, cap);
    out.interval_method = "first-fit-decreasing";
  } else {
    AptasResult packed = aptas_bp(sizes, cap, Rat(1, 55));
    groups = std::move(packed.groups);
    out.interval_method = "rounded";
  }

  if (wide) {
    const Len third = ins.slots / 3;
    const Len interval_starts[3] = {1, third + 1, 2 * third + 1};
    for (std::size_t i = 0; i < groups.size(); i += 3) {
      std::vector<std::vector<Task>> stacks;
      std::vector<Task> all;
      for (std::size_t j = i; j < std::min(groups.size(), i + 3); ++j) {
        std::vector<Task> stack;
        for (std::size_t idx : groups[j]) stack.push_back(order[idx]);
        all.insert(all.end(), stack.begin(), stack.end());
        stacks.push_back(std::move(stack));
      }
      std::vector<Bin> shelved = nfdh(all, ins.slots, ins.capacity);
      if (shelved.size() == 1) {
        out.structured.solution.bins.push_back(std::move(shelved[0]));
        out.structured.tags.push_back(BinTag::sorted_profile());
        continue;
      }
      if (2 * square_area(all) >= full) {
        Bin bin;
        for (std::size_t s = 0; s < stacks.size(); ++s) {
          for (const Task& t : stacks[s]) bin.placements.push_back({t, interval_starts[s]});
        }
        out.structured.solution.bins.push_back(std::move(bin));
        out.structured.tags.push_back(BinTag::alpha_full(Rat(1, 2)));
      } else {
        for (const std::vector<Task>& stack : stacks) {
          Bin single;
          for (const Task& t : stack) single.placements.push_back({t, 1});
          out.structured.solution.bins.push_back(std::move(single));
          out.structured.tags.push_back(BinTag::sorted_profile());
        }
      }
    }
  } else {
    for (std::size_t i = 0; i < groups.size(); i += 3) {
      Bin bin;
      for (std::size_t j = i; j < std::min(groups.size(), i + 3); ++j) {
        std::vector<Task> row;
        for (std::size_t idx : groups[j]) row.push_back(order[idx]);
        row = by_side_desc(std::move(row));
        Len at = 1;
        for (const Task& t : row) {
          bin.placements.push_back({t, at});
          at += t.width;
        }
      }
      out.structured.solution.bins.push_back(std::move(bin));
      out.structured.tags.push_back(BinTag::sorted_profile());
    }
  }
  return out;
}

}  // namespace

SquareCase classify_square_case(Len slots, Len capacity) {
  if (Wide(3) * slots >= Wide(4) * capacity) return SquareCase::WideBin;
  if (slots >= capacity) return SquareCase::NearSquareWide;
  if (Wide(4) * slots > Wide(3) * capacity) return SquareCase::NearSquareTall;
  return SquareCase::TallBin;
}

std::vector<Bin> leftmost_fit_big_squares(const std::vector<Task>& squares, Len slots,
                                          Len capacity) {
  if (slots != capacity) throw DomainError("leftmost fit expects a square bin");
  for (const Task& t : squares) {
    if (t.width != t.height) {
      throw DomainError("task " + std::to_string(t.id) + " is not square");
    }
    if (Wide(3) * t.width <= capacity) {
      throw DomainError("task " + std::to_string(t.id) +
                        " has side at most a third of the capacity");
    }
  }
  return leftmost_fit(squares, slots, capacity, true);
}

std::vector<Bin> pack_nine_groups(const std::vector<Task>& squares, Len slots, Len capacity) {
  if (slots != capacity) throw DomainError("nine-group packing expects a square bin");
  for (const Task& t : squares) {
    if (t.width != t.height) {
      throw DomainError("task " + std::to_string(t.id) + " is not square");
    }
    if (Wide(4) * t.width <= capacity || Wide(3) * t.width > capacity) {
      throw DomainError("task " + std::to_string(t.id) +
                        " has side outside the quarter-to-third band");
    }
  }
  const std::vector<Task> order = by_side_desc(squares);
  std::vector<Bin> bins;
  for (std::size_t i = 0; i < order.size(); i += 9) {
    const std::vector<Task> group(order.begin() + i,
                                  order.begin() + std::min(order.size(), i + 9));
    std::vector<Bin> shelved = nfdh(group, slots, capacity);
    if (shelved.size() != 1) {
      throw std::logic_error("a group of nine squares did not fit one bin");
    }
    bins.push_back(std::move(shelved[0]));
  }
  return bins;
}

SquaresSolveResult solve_squares_eq(const Instance& instance) {
  validate_instance(instance);
  if (instance.slots != instance.capacity) {
    throw DomainError("the square-bin solver expects the timeline to equal the capacity");
  }
  require_squares(instance);

  SquaresSolveResult out;
  out.report.square_case = classify_square_case(instance.slots, instance.capacity);
  if (instance.tasks.empty()) {
    out.report.guarantee_certificate = true;
    return out;
  }

  const Len c = instance.capacity;
  std::vector<Task> thirds, band, smalls;
  for (const Task& t : instance.tasks) {
    if (Wide(3) * t.width > c) thirds.push_back(t);
    else if (Wide(4) * t.width > c) band.push_back(t);
    else smalls.push_back(t);
  }

  StructuredSolution structured;
  structured.k = Rat(2);
  for (const Bin& bin : leftmost_fit_big_squares(thirds, instance.slots, c)) {
    std::vector<Task> tasks;
    tasks.reserve(bin.placements.size());
    for (const Placement& p : bin.placements) tasks.push_back(p.task);
    structured.solution.bins.push_back(reshelve_one_bin(tasks, instance.slots, c));
    structured.tags.push_back(BinTag::sorted_profile());
  }
  for (Bin& bin : pack_nine_groups(band, instance.slots, c)) {
    structured.solution.bins.push_back(std::move(bin));
    structured.tags.push_back(BinTag::sorted_profile());
  }

  FitParams params;
  params.k = Rat(2);
  params.delta_h = Rat(1, 4);
  params.delta_w = Rat(1, 4);
  FitResult fit = first_fit_on_top(instance, structured, smalls, params);
  if (!verify_solution(instance, fit.solution).ok()) {
    throw std::logic_error("the square-bin solution failed verification");
  }

  // Certified lower bound: the area bound, nine per bin for the band, and
  // for the large squares the loners (nothing else fits beside them) plus
  // four per bin for the rest.
  std::size_t lower = static_cast<std::size_t>(area_lower_bound(instance));
  lower = std::max(lower, (band.size() + 8) / 9);
  if (!thirds.empty()) {
    Len min_side = thirds.front().width;
    for (const Task& t : thirds) min_side = std::min(min_side, t.width);
    std::size_t loners = 0;
    for (const Task& t : thirds) {
      if (t.width + min_side > c) ++loners;
    }
    lower = std::max(lower, loners + (thirds.size() - loners + 3) / 4);
  }
  lower = std::max<std::size_t>(lower, 1);

  out.solution = std::move(fit.solution);
  out.report.accepted_guess = lower;
  out.report.structured_bins = structured.solution.bins.size();
  out.report.final_bins = out.solution.bins.size();
  out.report.guarantee_certificate = out.report.final_bins <= 2 * lower;
  return out;
}

SquaresSolveResult solve_squares_general(const Instance& instance) {
  validate_instance(instance);
  require_squares(instance);

  SquaresSolveResult out;
  const SquareCase square_case = classify_square_case(instance.slots, instance.capacity);
  out.report.square_case = square_case;
  if (instance.tasks.empty()) {
    out.report.guarantee_certificate = true;
    return out;
  }

  std::vector<Task> big, smalls;
  FitParams params;
  params.k = Rat(2);
  switch (square_case) {
    case SquareCase::WideBin:
      for (const Task& t : instance.tasks) {
        (Wide(3) * t.width > instance.capacity ? big : smalls).push_back(t);
      }
      params.delta_h = Rat(1, 3);
      params.delta_w = Rat(1, 4);
      break;
    case SquareCase::NearSquareWide:
      for (const Task& t : instance.tasks) {
        (Wide(4) * t.width > instance.slots ? big : smalls).push_back(t);
      }
      params.delta_h = Rat(1, 3);
      params.delta_w = Rat(1, 4);
      break;
    case SquareCase::NearSquareTall:
      for (const Task& t : instance.tasks) {
        (Wide(4) * t.width > instance.capacity ? big : smalls).push_back(t);
      }
      params.delta_h = Rat(1, 4);
      params.delta_w = Rat(1, 3);
      break;
    case SquareCase::TallBin:
      for (const Task& t : instance.tasks) {
        (Wide(3) * t.width > instance.slots ? big : smalls).push_back(t);
      }
      params.delta_h = Rat(1, 4);
      params.delta_w = Rat(1, 3);
      break;
  }

  struct Candidate {
    std::size_t bins = 0;
    std::size_t guess = 0;
    std::size_t structured = 0;
    Solution solution;
  };
  std::optional<Candidate> best;
  std::string best_method;

  const auto consider = [&](const StructuredSolution& structured, const std::string& method,
                            std::size_t guess) {
    if (find_tag_violation(instance, structured)) return;
    FitResult fit = first_fit_on_top(instance, structured, smalls, params);
    if (!verify_solution(instance, fit.solution).ok()) {
      throw std::logic_error("guess " + std::to_string(guess) +
                             " produced an invalid solution");
    }
    const std::size_t bins = fit.solution.bins.size();
    if (!best || bins < best->bins) {
      best = Candidate{bins, guess, structured.solution.bins.size(), std::move(fit.solution)};
      best_method = method;
    }
  };

  const bool near = square_case == SquareCase::NearSquareWide ||
                    square_case == SquareCase::NearSquareTall;
  std::optional<StructuredBuild> relaxed;
  bool relaxed_considered = false;

  const std::size_t n = instance.tasks.size();
  const std::size_t lb =
      static_cast<std::size_t>(std::max<long long>(1, area_lower_bound(instance)));
  for (std::size_t g = lb; g <= n; ++g) {
    out.report.guesses_tried.push_back(g);
    switch (square_case) {
      case SquareCase::WideBin:
        if (std::optional<StructuredSolution> s = build_wide_regions(instance, big, g)) {
          consider(*s, "", g);
        }
        break;
      case SquareCase::TallBin:
        if (std::optional<StructuredSolution> s = build_tall_regions(instance, big, g)) {
          consider(*s, "", g);
        }
        break;
      case SquareCase::NearSquareWide:
      case SquareCase::NearSquareTall: {
        if (g <= kGuessCut) {
          if (std::optional<StructuredSolution> s = build_near_exact(instance, big, g)) {
            consider(*s, "", g);
          }
        } else if (!relaxed_considered) {
          // The construction does not depend on the guess, so later guesses
          // can only repeat this candidate with a larger guess value.
          relaxed_considered = true;
          relaxed = build_near_relaxed(instance, big,
                                       square_case == SquareCase::NearSquareWide);
          consider(relaxed->structured, relaxed->interval_method, g);
        }
        break;
      }
    }
  }

  if (!best && near) {
    if (!relaxed) {
      relaxed = build_near_relaxed(instance, big, square_case == SquareCase::NearSquareWide);
    }
    consider(relaxed->structured, relaxed->interval_method, n);
  }
  if (!best) {
    throw std::logic_error("no guess between the area bound and the task count worked");
  }

  out.solution = std::move(best->solution);
  out.report.accepted_guess = best->guess;
  out.report.structured_bins = best->structured;
  out.report.final_bins = best->bins;
  out.report.guarantee_certificate = best->bins <= 2 * best->guess;
  out.report.interval_packing_method = best_method;
  return out;
}

}  // namespace dbp
