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

#include "dbp/solver_general.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "dbp/bp1d.hpp"
#include "dbp/classify.hpp"
#include "dbp/errors.hpp"
#include "dbp/first_fit.hpp"
#include "dbp/profile.hpp"
#include "dbp/rational.hpp"
#include "dbp/shelf.hpp"
#include "dbp/verify.hpp"

namespace dbp {
namespace {

// Guesses at most this go through the exact case analysis; larger ones use
// the rounding-based one-dimensional packing.
constexpr std::size_t kRegimeCut = 70;

std::vector<Task> by_height_desc(std::vector<Task> tasks) {
  std::sort(tasks.begin(), tasks.end(), [](const Task& a, const Task& b) {
    if (a.height != b.height) return a.height > b.height;
    if (a.width != b.width) return a.width > b.width;
    return a.id < b.id;
  });
  return tasks;
}

std::vector<Task> by_width_desc(std::vector<Task> tasks) {
  std::sort(tasks.begin(), tasks.end(), [](const Task& a, const Task& b) {
    if (a.width != b.width) return a.width > b.width;
    if (a.height != b.height) return a.height > b.height;
    return a.id < b.id;
  });
  return tasks;
}

std::vector<Rat> rat_widths(const std::vector<Task>& tasks) {
  std::vector<Rat> out;
  out.reserve(tasks.size());
  for (const Task& t : tasks) out.push_back(Rat(t.width));
  return out;
}

std::vector<Rat> rat_heights(const std::vector<Task>& tasks) {
  std::vector<Rat> out;
  out.reserve(tasks.size());
  for (const Task& t : tasks) out.push_back(Rat(t.height));
  return out;
}

// Skips empty groups; group indices refer to `tasks`.
std::vector<std::vector<Task>> regroup(const std::vector<Task>& tasks, const Groups& groups) {
  std::vector<std::vector<Task>> out;
  for (const std::vector<std::size_t>& group : groups) {
    if (group.empty()) continue;
    std::vector<Task> members;
    members.reserve(group.size());
    for (std::size_t i : group) members.push_back(tasks[i]);
    out.push_back(std::move(members));
  }
  return out;
}

// Keeps empty groups so the caller can tell full-size bins from half-size
// ones by index.
std::vector<std::vector<Task>> regroup_assignment(const std::vector<Task>& tasks,
                                                  const std::vector<std::size_t>& assignment,
                                                  std::size_t bin_count) {
  std::vector<std::vector<Task>> out(bin_count);
  for (std::size_t i = 0; i < tasks.size(); ++i) out[assignment[i]].push_back(tasks[i]);
  return out;
}

// Tasks side by side from slot 1, tallest first, so the profile steps down.
Bin row_of(const std::vector<Task>& tasks, Len slots) {
  __int128 total = 0;
  for (const Task& t : tasks) total += t.width;
  if (total > slots) throw std::logic_error("a row of tasks overflowed the timeline");
  Bin bin;
  Len at = 1;
  for (const Task& t : by_height_desc(tasks)) {
    bin.placements.push_back(Placement{t, at});
    at += t.width;
  }
  return bin;
}

// Shelves fat tasks four per bin: two fit side by side (widths at most half
// the timeline) and two such shelves fit stacked (heights at most half the
// capacity), so every group lands in one bin.
std::vector<Bin> fat_quads(const std::vector<Task>& fat, Len slots, Len capacity) {
  const std::vector<Task> order = by_height_desc(fat);
  std::vector<Bin> bins;
  for (std::size_t i = 0; i < order.size(); i += 4) {
    const std::vector<Task> group(order.begin() + i,
                                  order.begin() + std::min(order.size(), i + 4));
    std::vector<Bin> shelved = nfdh(group, slots, capacity);
    if (shelved.size() != 1) {
      throw std::logic_error("a group of four fat tasks did not fit one bin");
    }
    bins.push_back(std::move(shelved[0]));
  }
  return bins;
}

// Wide tasks stacked at slot 1 (total height at most half the capacity)
// under a shelf of at most two fat tasks. Both parts have non-increasing
// profiles and each tops out at half the capacity, so the sum is feasible
// and sorted.
Bin rider_bin(const std::vector<Task>& wides, const std::vector<Task>& riders, Len slots,
              Len capacity) {
  Bin bin = stack_sorted(wides, slots, capacity);
  __int128 total = 0;
  for (const Task& t : riders) total += t.width;
  if (total > slots) {
    throw std::logic_error("fat tasks overflowed the timeline beside a wide stack");
  }
  Len at = 1;
  for (const Task& t : by_height_desc(riders)) {
    bin.placements.push_back(Placement{t, at});
    at += t.width;
  }
  return bin;
}

// Next-fit on one dimension: walk the tasks in order and open a new group
// whenever the running total would pass the limit.
std::vector<std::vector<Task>> next_fit_by_width(const std::vector<Task>& order, Len limit) {
  std::vector<std::vector<Task>> groups;
  Len used = 0;
  for (const Task& t : order) {
    if (groups.empty() || static_cast<__int128>(used) + t.width > limit) {
      groups.emplace_back();
      used = 0;
    }
    groups.back().push_back(t);
    used += t.width;
  }
  return groups;
}

std::vector<std::vector<Task>> next_fit_by_height(const std::vector<Task>& order, Len limit) {
  std::vector<std::vector<Task>> groups;
  Len used = 0;
  for (const Task& t : order) {
    if (groups.empty() || static_cast<__int128>(used) + t.height > limit) {
      groups.emplace_back();
      used = 0;
    }
    groups.back().push_back(t);
    used += t.height;
  }
  return groups;
}

void append_sorted(StructuredSolution& structured, Bin bin) {
  structured.solution.bins.push_back(std::move(bin));
  structured.tags.push_back(BinTag::sorted_profile());
}

}  // namespace

std::optional<StructuredGuess> structured_le70(const Instance& instance, std::size_t guess) {
  validate_instance(instance);
  const ClassBuckets buckets = classify_instance(instance);
  const Len slots = instance.slots;
  const Len cap = instance.capacity;
  const std::size_t budget = 3 * guess;
  const long long g = static_cast<long long>(guess);
  const bool tall_heavy = static_cast<__int128>(9) * buckets.tall_width >
                          static_cast<__int128>(9) * g * slots - slots;
  const bool wide_heavy = static_cast<__int128>(9) * buckets.wide_height >
                          static_cast<__int128>(9) * g * cap - cap;

  if (tall_heavy && wide_heavy) {
    // Tall and wide tasks alone carry almost the whole guessed area, so a
    // fat task on top of them cannot fit any feasible packing of this size.
    if (!buckets.fat.empty()) return std::nullopt;
    StructuredGuess out;
    out.subcase = "both-large";
    out.structured.k = Rat(3);
    for (const std::vector<Task>& group :
         regroup(buckets.tall, ffd(rat_widths(buckets.tall), Rat(slots)))) {
      append_sorted(out.structured, row_of(group, slots));
    }
    for (const std::vector<Task>& group :
         regroup(buckets.wide, ffd(rat_heights(buckets.wide), Rat(cap)))) {
      append_sorted(out.structured, stack_sorted(group, slots, cap));
    }
    if (out.structured.solution.bins.size() > budget) return std::nullopt;
    return out;
  }

  if (!tall_heavy && !wide_heavy) {
    if ((buckets.fat.size() + 3) / 4 > guess) return std::nullopt;
    const MkpResult talls =
        mkp_pack_all(rat_widths(buckets.tall), std::vector<Rat>(guess, Rat(slots)));
    if (!talls.feasible) return std::nullopt;
    const MkpResult wides =
        mkp_pack_all(rat_heights(buckets.wide), std::vector<Rat>(guess, Rat(cap)));
    if (!wides.feasible) return std::nullopt;
    StructuredGuess out;
    out.subcase = "both-small";
    out.structured.k = Rat(3);
    for (const std::vector<Task>& group :
         regroup_assignment(buckets.tall, talls.assignment, guess)) {
      if (!group.empty()) append_sorted(out.structured, row_of(group, slots));
    }
    for (const std::vector<Task>& group :
         regroup_assignment(buckets.wide, wides.assignment, guess)) {
      if (!group.empty()) append_sorted(out.structured, stack_sorted(group, slots, cap));
    }
    for (Bin& bin : fat_quads(buckets.fat, slots, cap)) {
      append_sorted(out.structured, std::move(bin));
    }
    if (out.structured.solution.bins.size() > budget) return std::nullopt;
    return out;
  }

  if (tall_heavy) {
    // Tall tasks dominate, so their packing stays first-fit decreasing while
    // the wide tasks are squeezed into a guessed mix of full- and
    // half-capacity bins; each half bin leaves room for two fat tasks.
    const std::vector<std::vector<Task>> tall_rows =
        regroup(buckets.tall, ffd(rat_widths(buckets.tall), Rat(slots)));
    const std::vector<Task> fat_order = by_height_desc(buckets.fat);
    for (std::size_t full = 0; full <= guess; ++full) {
      for (std::size_t half = 0; full + half <= guess; ++half) {
        std::vector<Rat> caps;
        caps.reserve(full + half);
        for (std::size_t j = 0; j < full; ++j) caps.push_back(Rat(cap));
        for (std::size_t j = 0; j < half; ++j) caps.push_back(Rat(cap, 2));
        const MkpResult wides = mkp_pack_all(rat_heights(buckets.wide), caps);
        if (!wides.feasible) continue;
        StructuredGuess out;
        out.subcase = "tall-large";
        out.structured.k = Rat(3);
        out.full_bins = full;
        out.half_bins = half;
        for (const std::vector<Task>& group : tall_rows) {
          append_sorted(out.structured, row_of(group, slots));
        }
        const std::vector<std::vector<Task>> wide_groups =
            regroup_assignment(buckets.wide, wides.assignment, full + half);
        std::size_t next_fat = 0;
        for (std::size_t j = 0; j < wide_groups.size(); ++j) {
          if (wide_groups[j].empty()) continue;
          if (j < full) {
            append_sorted(out.structured, stack_sorted(wide_groups[j], slots, cap));
            continue;
          }
          std::vector<Task> riders;
          while (riders.size() < 2 && next_fat < fat_order.size()) {
            riders.push_back(fat_order[next_fat++]);
          }
          append_sorted(out.structured, rider_bin(wide_groups[j], riders, slots, cap));
        }
        const std::vector<Task> leftover(fat_order.begin() + next_fat, fat_order.end());
        for (Bin& bin : fat_quads(leftover, slots, cap)) {
          append_sorted(out.structured, std::move(bin));
        }
        if (out.structured.solution.bins.size() <= budget) return out;
      }
    }
    return std::nullopt;
  }

  // Wide tasks dominate: mirrored, except fat tasks cannot sit on top of a
  // row of tall tasks, so the half-width rows are paired two per bin and an
  // odd leftover row gets one fat task beside it instead.
  const std::vector<std::vector<Task>> wide_stacks =
      regroup(buckets.wide, ffd(rat_heights(buckets.wide), Rat(cap)));
  const std::vector<Task> fat_order = by_height_desc(buckets.fat);
  for (std::size_t full = 0; full <= guess; ++full) {
    for (std::size_t half = 0; full + half <= guess; ++half) {
      std::vector<Rat> caps;
      caps.reserve(full + half);
      for (std::size_t j = 0; j < full; ++j) caps.push_back(Rat(slots));
      for (std::size_t j = 0; j < half; ++j) caps.push_back(Rat(slots, 2));
      const MkpResult talls = mkp_pack_all(rat_widths(buckets.tall), caps);
      if (!talls.feasible) continue;
      StructuredGuess out;
      out.subcase = "wide-large";
      out.structured.k = Rat(3);
      out.full_bins = full;
      out.half_bins = half;
      for (const std::vector<Task>& group : wide_stacks) {
        append_sorted(out.structured, stack_sorted(group, slots, cap));
      }
      const std::vector<std::vector<Task>> tall_groups =
          regroup_assignment(buckets.tall, talls.assignment, full + half);
      std::vector<std::vector<Task>> half_rows;
      for (std::size_t j = 0; j < tall_groups.size(); ++j) {
        if (tall_groups[j].empty()) continue;
        if (j < full) {
          append_sorted(out.structured, row_of(tall_groups[j], slots));
        } else {
          half_rows.push_back(tall_groups[j]);
        }
      }
      std::size_t next_fat = 0;
      for (std::size_t i = 0; i + 1 < half_rows.size(); i += 2) {
        std::vector<Task> merged = half_rows[i];
        merged.insert(merged.end(), half_rows[i + 1].begin(), half_rows[i + 1].end());
        append_sorted(out.structured, row_of(merged, slots));
      }
      if (half_rows.size() % 2 == 1) {
        std::vector<Task> last = half_rows.back();
        if (next_fat < fat_order.size()) last.push_back(fat_order[next_fat++]);
        append_sorted(out.structured, row_of(last, slots));
      }
      const std::vector<Task> leftover(fat_order.begin() + next_fat, fat_order.end());
      for (Bin& bin : fat_quads(leftover, slots, cap)) {
        append_sorted(out.structured, std::move(bin));
      }
      if (out.structured.solution.bins.size() <= budget) return out;
    }
  }
  return std::nullopt;
}

std::optional<StructuredGuess> structured_gt70(const Instance& instance, std::size_t guess) {
  validate_instance(instance);
  const ClassBuckets buckets = classify_instance(instance);
  const Len slots = instance.slots;
  const Len cap = instance.capacity;
  const std::size_t budget = 3 * guess;
  StructuredGuess out;
  out.structured.k = Rat(3);

  // Fat count at most 4 * (1 - 4/70) * guess, cross-multiplied.
  if (static_cast<__int128>(35) * buckets.fat.size() <=
      static_cast<__int128>(132) * guess) {
    out.subcase = "few-fat";
    for (Bin& bin : fat_quads(buckets.fat, slots, cap)) {
      append_sorted(out.structured, std::move(bin));
    }
    const AptasResult talls = aptas_bp(rat_widths(buckets.tall), Rat(slots), Rat(1, 70));
    for (const std::vector<Task>& group : regroup(buckets.tall, talls.groups)) {
      append_sorted(out.structured, row_of(group, slots));
    }
    const AptasResult wides = aptas_bp(rat_heights(buckets.wide), Rat(cap), Rat(1, 70));
    for (const std::vector<Task>& group : regroup(buckets.wide, wides.groups)) {
      append_sorted(out.structured, stack_sorted(group, slots, cap));
    }
    if (out.structured.solution.bins.size() > budget) return std::nullopt;
    return out;
  }

  // Fat tasks dominate the area, so tall and wide tasks are sparse enough
  // for greedy packing. The ones whose other dimension also passes a third
  // of the bin each get their own bin; the lean rest fills bins past a third
  // of the area, except possibly the last bin per direction.
  out.subcase = "many-fat";
  for (Bin& bin : fat_quads(buckets.fat, slots, cap)) {
    append_sorted(out.structured, std::move(bin));
  }
  std::vector<Task> lean_tall, lean_wide;
  for (const Task& t : buckets.tall) {
    if (static_cast<__int128>(3) * t.width > slots) {
      Bin bin;
      bin.placements.push_back(Placement{t, 1});
      append_sorted(out.structured, std::move(bin));
    } else {
      lean_tall.push_back(t);
    }
  }
  for (const Task& t : buckets.wide) {
    if (static_cast<__int128>(3) * t.height > cap) {
      Bin bin;
      bin.placements.push_back(Placement{t, 1});
      append_sorted(out.structured, std::move(bin));
    } else {
      lean_wide.push_back(t);
    }
  }
  for (const std::vector<Task>& group : next_fit_by_width(by_height_desc(lean_tall), slots)) {
    append_sorted(out.structured, row_of(group, slots));
  }
  for (const std::vector<Task>& group : next_fit_by_height(by_width_desc(lean_wide), cap)) {
    append_sorted(out.structured, stack_sorted(group, slots, cap));
  }
  if (out.structured.solution.bins.size() > budget) return std::nullopt;
  return out;
}

GeneralSolveResult solve_general(const Instance& instance) {
  validate_instance(instance);
  GeneralSolveResult out;
  if (instance.tasks.empty()) {
    out.report.guarantee_certificate = true;
    return out;
  }

  const ClassBuckets buckets = classify_instance(instance);
  FitParams params;
  params.k = Rat(3);
  params.delta_h = Rat(1, 3);
  params.delta_w = Rat(1, 3);
  params.mixed = true;

  struct Candidate {
    std::size_t bins = 0;
    std::size_t guess = 0;
    std::size_t structured = 0;
    Solution solution;
    std::string subcase;
    std::optional<std::size_t> full_bins;
    std::optional<std::size_t> half_bins;
  };
  std::optional<Candidate> best;

  const std::size_t n = instance.tasks.size();
  const std::size_t lb =
      static_cast<std::size_t>(std::max<long long>(1, area_lower_bound(instance)));
  for (std::size_t g = lb; g <= n; ++g) {
    out.report.guesses_tried.push_back(g);
    const std::optional<StructuredGuess> built =
        g <= kRegimeCut ? structured_le70(instance, g) : structured_gt70(instance, g);
    if (!built) continue;
    if (find_tag_violation(instance, built->structured)) continue;
    FitResult fit = first_fit_on_top(instance, built->structured, buckets.small, params);
    if (!verify_solution(instance, fit.solution).ok()) {
      throw std::logic_error("guess " + std::to_string(g) + " produced an invalid solution");
    }
    const std::size_t bins = fit.solution.bins.size();
    if (!best || bins < best->bins) {
      best = Candidate{bins,
                       g,
                       built->structured.solution.bins.size(),
                       std::move(fit.solution),
                       built->subcase,
                       built->full_bins,
                       built->half_bins};
    }
  }

  if (!best) {
    // Every guess was rejected, which the case analysis rules out; pack with
    // plain shelves so the caller still gets a feasible answer and flag it.
    out.solution.bins = nfdh(instance.tasks, instance.slots, instance.capacity);
    if (!verify_solution(instance, out.solution).ok()) {
      throw std::logic_error("the fallback shelf packing failed verification");
    }
    out.report.used_fallback = true;
    out.report.subcase = "fallback";
    out.report.final_bins = out.solution.bins.size();
    return out;
  }

  out.solution = std::move(best->solution);
  out.report.accepted_guess = best->guess;
  out.report.regime = best->guess <= kRegimeCut ? GuessRegime::Le70 : GuessRegime::Gt70;
  out.report.subcase = best->subcase;
  out.report.full_bins = best->full_bins;
  out.report.half_bins = best->half_bins;
  out.report.structured_bins = best->structured;
  out.report.final_bins = out.solution.bins.size();
  out.report.guarantee_certificate = out.report.final_bins <= 3 * best->guess;
  return out;
}

StructuralReport check_fat_task_bounds(const Instance& instance, const Bin& bin) {
  validate_instance(instance);
  const LoadProfile profile = load_profile(instance, bin);
  if (profile.max_in(1, instance.slots) > instance.capacity) {
    throw DomainError("the bin overloads a slot, so the structural bounds do not apply");
  }

  StructuralReport report;
  for (const Placement& p : bin.placements) {
    switch (classify_task(p.task, instance.slots, instance.capacity)) {
      case TaskClass::Tall:
        report.tall_width += p.task.width;
        break;
      case TaskClass::Wide:
        report.wide_height += p.task.height;
        break;
      case TaskClass::Fat:
        ++report.fat_count;
        break;
      case TaskClass::Small:
        break;
    }
  }

  const Len slots = instance.slots;
  const Len cap = instance.capacity;
  report.three_fat_tall_heavy.premise =
      report.fat_count >= 3 &&
      static_cast<__int128>(9) * report.tall_width > static_cast<__int128>(8) * slots;
  report.three_fat_tall_heavy.conclusion =
      static_cast<__int128>(9) * report.wide_height < static_cast<__int128>(4) * cap;
  report.three_fat_wide_heavy.premise =
      report.fat_count >= 3 &&
      static_cast<__int128>(9) * report.wide_height > static_cast<__int128>(8) * cap;
  report.three_fat_wide_heavy.conclusion =
      static_cast<__int128>(9) * report.tall_width < static_cast<__int128>(4) * slots;
  report.four_fat.premise = report.fat_count >= 4;
  report.four_fat.conclusion =
      static_cast<__int128>(3) * report.tall_width <= static_cast<__int128>(2) * slots &&
      static_cast<__int128>(3) * report.wide_height <= static_cast<__int128>(2) * cap;

  for (ClaimCheck* claim :
       {&report.three_fat_tall_heavy, &report.three_fat_wide_heavy, &report.four_fat}) {
    claim->counterexample = claim->premise && !claim->conclusion;
    if (claim->counterexample) report.any_counterexample = true;
  }
  return report;
}

}  // namespace dbp
