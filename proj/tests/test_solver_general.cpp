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

#include <algorithm>
#include <cstdint>
#include <vector>

#include "dbp/classify.hpp"
#include "dbp/errors.hpp"
#include "dbp/model.hpp"
#include "dbp/oracle.hpp"
#include "dbp/profile.hpp"
#include "dbp/rational.hpp"
#include "dbp/solver_general.hpp"
#include "dbp/structured.hpp"
#include "dbp/verify.hpp"
#include "doctest.h"

namespace dbp {
namespace {

Instance instance_of(Len slots, Len capacity, std::vector<Task> tasks) {
  Instance ins;
  ins.slots = slots;
  ins.capacity = capacity;
  ins.tasks = std::move(tasks);
  return ins;
}

struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long long below(long long n) { return static_cast<long long>(next() % static_cast<std::uint64_t>(n)); }
};

std::size_t oracle_optimum(const Instance& ins) {
  OptOutcome opt = exact_demand_bp(ins);
  REQUIRE(opt.status == SearchStatus::Proven);
  return opt.bin_count;
}

TEST_CASE("task classes partition every instance") {
  const Len T = 12;
  const Len C = 12;
  CHECK(classify_task({1, 1, 7}, T, C) == TaskClass::Tall);
  CHECK(classify_task({2, 7, 7}, T, C) == TaskClass::Tall);
  CHECK(classify_task({3, 12, 6}, T, C) == TaskClass::Wide);
  CHECK(classify_task({4, 7, 5}, T, C) == TaskClass::Wide);
  CHECK(classify_task({5, 5, 5}, T, C) == TaskClass::Fat);
  CHECK(classify_task({6, 4, 5}, T, C) == TaskClass::Small);
  CHECK(classify_task({7, 6, 4}, T, C) == TaskClass::Small);

  SplitMix rng{2026};
  std::vector<Task> tasks;
  for (int i = 1; i <= 200; ++i) {
    tasks.push_back({i, 1 + rng.below(30), 1 + rng.below(25)});
  }
  Instance ins = instance_of(30, 25, std::move(tasks));
  ClassBuckets buckets = classify_instance(ins);
  CHECK(buckets.tall.size() + buckets.wide.size() + buckets.fat.size() + buckets.small.size() ==
        ins.tasks.size());
  long long tall_width = 0;
  long long wide_height = 0;
  for (const Task& t : buckets.tall) {
    CHECK(classify_task(t, 30, 25) == TaskClass::Tall);
    tall_width += t.width;
  }
  for (const Task& t : buckets.wide) {
    CHECK(classify_task(t, 30, 25) == TaskClass::Wide);
    wide_height += t.height;
  }
  for (const Task& t : buckets.fat) CHECK(classify_task(t, 30, 25) == TaskClass::Fat);
  for (const Task& t : buckets.small) CHECK(classify_task(t, 30, 25) == TaskClass::Small);
  CHECK(buckets.tall_width == tall_width);
  CHECK(buckets.wide_height == wide_height);
}

TEST_CASE("four fat tasks per bin fill the guessed count exactly") {
  std::vector<Task> tasks;
  for (int i = 1; i <= 20; ++i) tasks.push_back({i, 4, 4});
  Instance ins = instance_of(9, 9, std::move(tasks));

  std::optional<StructuredGuess> got = structured_le70(ins, 5);
  REQUIRE(got.has_value());
  CHECK(got->subcase == "both-small");
  CHECK(got->structured.solution.bins.size() == 5);
  for (const Bin& bin : got->structured.solution.bins) CHECK(bin.placements.size() == 4);
  CHECK(!find_tag_violation(ins, got->structured).has_value());
  CHECK(verify_solution(ins, got->structured.solution).ok());

  GeneralSolveResult solved = solve_general(ins);
  CHECK(verify_solution(ins, solved.solution).ok());
  CHECK(solved.report.final_bins == 5);
  CHECK(solved.report.accepted_guess == 5);
  CHECK(solved.report.guarantee_certificate);
  CHECK(!solved.report.used_fallback);
}

TEST_CASE("full-width tall tasks need one bin each") {
  std::vector<Task> tasks;
  for (int i = 1; i <= 7; ++i) tasks.push_back({i, 6, 6});
  Instance ins = instance_of(6, 10, std::move(tasks));

  std::optional<StructuredGuess> got = structured_le70(ins, 7);
  REQUIRE(got.has_value());
  CHECK(got->subcase == "tall-large");
  CHECK(got->structured.solution.bins.size() == 7);

  GeneralSolveResult solved = solve_general(ins);
  CHECK(verify_solution(ins, solved.solution).ok());
  CHECK(solved.report.final_bins == 7);
  CHECK(solved.report.accepted_guess == 5);
  CHECK(solved.report.subcase == "tall-large");
  CHECK(solved.report.guarantee_certificate);
}

TEST_CASE("fat tasks ride on top of half-capacity wide stacks") {
  std::vector<Task> tasks = {
      {1, 12, 7}, {2, 12, 7}, {3, 12, 7},  // tall, one full row each
      {4, 7, 3},                           // wide, light enough for a half bin
      {5, 5, 5},  {6, 5, 5},               // fat riders
  };
  Instance ins = instance_of(12, 12, std::move(tasks));

  std::optional<StructuredGuess> got = structured_le70(ins, 3);
  REQUIRE(got.has_value());
  CHECK(got->subcase == "tall-large");
  REQUIRE(got->full_bins.has_value());
  REQUIRE(got->half_bins.has_value());
  CHECK(*got->full_bins == 0);
  CHECK(*got->half_bins == 1);
  CHECK(got->structured.solution.bins.size() == 4);
  CHECK(!find_tag_violation(ins, got->structured).has_value());
  CHECK(verify_solution(ins, got->structured.solution).ok());

  std::size_t rider_bins = 0;
  for (const Bin& bin : got->structured.solution.bins) {
    if (bin.placements.size() != 3) continue;
    ++rider_bins;
    std::size_t wides = 0;
    std::size_t fats = 0;
    for (const Placement& p : bin.placements) {
      if (p.task.width == 7) ++wides;
      if (p.task.width == 5) ++fats;
    }
    CHECK(wides == 1);
    CHECK(fats == 2);
  }
  CHECK(rider_bins == 1);

  GeneralSolveResult solved = solve_general(ins);
  CHECK(verify_solution(ins, solved.solution).ok());
  CHECK(solved.report.final_bins == 4);
  CHECK(solved.report.subcase == "tall-large");
  CHECK(solved.report.final_bins <= 3 * oracle_optimum(ins));
}

TEST_CASE("half-width tall rows pair up and an odd row takes a fat task") {
  std::vector<Task> tasks;
  for (int i = 1; i <= 8; ++i) tasks.push_back({i, 7, 6});    // wide
  for (int i = 9; i <= 11; ++i) tasks.push_back({i, 4, 7});   // tall, half-width rows
  tasks.push_back({12, 5, 5});                                // fat
  Instance ins = instance_of(12, 12, std::move(tasks));

  std::optional<StructuredGuess> got = structured_le70(ins, 4);
  REQUIRE(got.has_value());
  CHECK(got->subcase == "wide-large");
  REQUIRE(got->full_bins.has_value());
  REQUIRE(got->half_bins.has_value());
  CHECK(*got->full_bins == 0);
  CHECK(*got->half_bins == 3);
  CHECK(got->structured.solution.bins.size() == 6);
  CHECK(!find_tag_violation(ins, got->structured).has_value());
  CHECK(verify_solution(ins, got->structured.solution).ok());

  std::size_t paired_rows = 0;
  std::size_t odd_rows_with_fat = 0;
  for (const Bin& bin : got->structured.solution.bins) {
    if (bin.placements.size() != 2) continue;
    std::size_t talls = 0;
    std::size_t fats = 0;
    for (const Placement& p : bin.placements) {
      if (p.task.height == 7) ++talls;
      if (p.task.height == 5) ++fats;
    }
    if (talls == 2) ++paired_rows;
    if (talls == 1 && fats == 1) ++odd_rows_with_fat;
  }
  CHECK(paired_rows == 1);
  CHECK(odd_rows_with_fat == 1);

  GeneralSolveResult solved = solve_general(ins);
  CHECK(verify_solution(ins, solved.solution).ok());
  CHECK(solved.report.final_bins == 6);
  CHECK(solved.report.subcase == "wide-large");

  // A four-bin packing exists, so the solver stays within the factor-three
  // bound without the oracle: stack two wides per bin and slot the leftover
  // tall or fat task into the uncovered tail of the timeline.
  Solution by_hand;
  for (int pair = 0; pair < 4; ++pair) {
    Bin bin;
    bin.placements.push_back({ins.tasks[2 * pair], 1});
    bin.placements.push_back({ins.tasks[2 * pair + 1], 1});
    bin.placements.push_back({ins.tasks[8 + pair], 8});
    by_hand.bins.push_back(bin);
  }
  CHECK(verify_solution(ins, by_hand).ok());
  CHECK(area_lower_bound(ins) == 4);
  CHECK(solved.report.final_bins <= 3 * 4);
}

TEST_CASE("heavy tall and wide loads exclude fat tasks") {
  std::vector<Task> tasks = {
      {1, 96, 51}, {2, 96, 51},                            // tall, almost full rows
      {3, 51, 48}, {4, 51, 48}, {5, 51, 48}, {6, 51, 48},  // wide, almost full stacks
  };
  Instance ins = instance_of(101, 101, tasks);

  std::optional<StructuredGuess> got = structured_le70(ins, 2);
  REQUIRE(got.has_value());
  CHECK(got->subcase == "both-large");
  CHECK(got->structured.solution.bins.size() == 4);
  CHECK(!find_tag_violation(ins, got->structured).has_value());
  CHECK(verify_solution(ins, got->structured.solution).ok());

  GeneralSolveResult solved = solve_general(ins);
  CHECK(verify_solution(ins, solved.solution).ok());
  CHECK(solved.report.accepted_guess == 2);
  CHECK(solved.report.subcase == "both-large");
  CHECK(solved.report.final_bins == 4);
  CHECK(solved.report.final_bins <= 3 * oracle_optimum(ins));

  // The same totals with a fat task present make the guess unusable.
  tasks.push_back({7, 35, 35});
  Instance with_fat = instance_of(101, 101, std::move(tasks));
  CHECK(!structured_le70(with_fat, 2).has_value());
}

TEST_CASE("the interlocked square fixture stays within three bins") {
  const std::vector<Len> sides = {10, 10, 8, 8, 5, 3, 3, 3, 3, 3, 3, 3, 3, 3};
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    tasks.push_back({static_cast<int>(i + 1), sides[i], sides[i]});
  }
  Instance ins = instance_of(21, 21, std::move(tasks));

  CHECK(oracle_optimum(ins) == 1);

  GeneralSolveResult solved = solve_general(ins);
  CHECK(verify_solution(ins, solved.solution).ok());
  CHECK(solved.report.final_bins == 2);
  CHECK(solved.report.final_bins <= 3);
  CHECK(solved.report.accepted_guess == 1);
  CHECK(solved.report.regime == GuessRegime::Le70);
  CHECK(solved.report.guarantee_certificate);
}

TEST_CASE("the general solver handles edge inputs") {
  GeneralSolveResult empty = solve_general(instance_of(5, 5, {}));
  CHECK(empty.solution.bins.empty());
  CHECK(empty.report.final_bins == 0);
  CHECK(empty.report.guesses_tried.empty());
  CHECK(empty.report.guarantee_certificate);
  CHECK(!empty.report.used_fallback);

  std::vector<Task> smalls;
  for (int i = 1; i <= 30; ++i) smalls.push_back({i, 2, 2});
  Instance ins = instance_of(12, 12, std::move(smalls));
  GeneralSolveResult solved = solve_general(ins);
  CHECK(verify_solution(ins, solved.solution).ok());
  CHECK(solved.report.final_bins == 1);
  CHECK(solved.report.accepted_guess == 1);
  CHECK(solved.report.structured_bins == 0);
  CHECK(solved.report.guarantee_certificate);
}

TEST_CASE("the general solver stays within three times the exact optimum") {
  SplitMix rng{777};
  for (int round = 0; round < 100; ++round) {
    Len slots = 4 + rng.below(12);
    Len capacity = 4 + rng.below(12);
    int n = 1 + static_cast<int>(rng.below(8));
    std::vector<Task> tasks;
    for (int i = 1; i <= n; ++i) {
      tasks.push_back({i, 1 + rng.below(slots), 1 + rng.below(capacity)});
    }
    Instance ins = instance_of(slots, capacity, std::move(tasks));

    GeneralSolveResult solved = solve_general(ins);
    REQUIRE(verify_solution(ins, solved.solution).ok());
    REQUIRE(solved.report.final_bins <= 3 * oracle_optimum(ins));
    CHECK(solved.report.guarantee_certificate);
    CHECK(!solved.report.used_fallback);
    REQUIRE(!solved.report.guesses_tried.empty());
    long long lower = std::max(1LL, area_lower_bound(ins));
    CHECK(solved.report.guesses_tried.front() == static_cast<std::size_t>(lower));
    CHECK(solved.report.accepted_guess >= static_cast<std::size_t>(lower));
  }
}

TEST_CASE("many fat tasks switch the solver to the large-count regime") {
  std::vector<Task> tasks;
  for (int i = 1; i <= 300; ++i) tasks.push_back({i, 5, 5});
  Instance ins = instance_of(10, 10, std::move(tasks));

  GeneralSolveResult solved = solve_general(ins);
  CHECK(verify_solution(ins, solved.solution).ok());
  CHECK(solved.report.regime == GuessRegime::Gt70);
  CHECK(solved.report.subcase == "many-fat");
  CHECK(solved.report.accepted_guess == 75);
  CHECK(solved.report.final_bins == 75);
  CHECK(solved.report.guarantee_certificate);
  for (const Bin& bin : solved.solution.bins) CHECK(bin.placements.size() == 4);
}

TEST_CASE("greedy rows in the large-count regime fill bins to a third") {
  std::vector<Task> tasks;
  int id = 1;
  for (int i = 0; i < 288; ++i) tasks.push_back({id++, 5, 5});  // fat
  for (int i = 0; i < 21; ++i) tasks.push_back({id++, 3, 7});   // tall, narrow
  tasks.push_back({id++, 5, 7});                                // tall, wider than a third
  tasks.push_back({id++, 5, 7});
  for (int i = 0; i < 6; ++i) tasks.push_back({id++, 7, 2});    // wide, low
  tasks.push_back({id++, 7, 5});                                // wide, taller than a third
  Instance ins = instance_of(12, 12, std::move(tasks));

  std::optional<StructuredGuess> got = structured_gt70(ins, 72);
  REQUIRE(got.has_value());
  CHECK(got->subcase == "many-fat");
  CHECK(got->structured.solution.bins.size() == 82);
  CHECK(!find_tag_violation(ins, got->structured).has_value());
  CHECK(verify_solution(ins, got->structured.solution).ok());

  std::size_t quad_bins = 0;
  std::size_t single_task_bins_past_a_third = 0;
  std::size_t narrow_tall_rows = 0;
  std::size_t thin_rows = 0;
  for (const Bin& bin : got->structured.solution.bins) {
    bool all_fat = bin.placements.size() == 4;
    for (const Placement& p : bin.placements) {
      all_fat = all_fat && p.task.width == 5 && p.task.height == 5;
    }
    if (all_fat) ++quad_bins;
    if (bin.placements.size() == 1 && 3 * bin.placements[0].task.width > ins.slots) {
      ++single_task_bins_past_a_third;
    }
    bool narrow_tall_only = !bin.placements.empty();
    for (const Placement& p : bin.placements) {
      narrow_tall_only = narrow_tall_only && p.task.width == 3 && p.task.height == 7;
    }
    if (!narrow_tall_only) continue;
    ++narrow_tall_rows;
    if (bin_fullness(ins, bin) < Rat(1, 3)) {
      ++thin_rows;
      CHECK(bin.placements.size() == 1);
    }
  }
  CHECK(quad_bins == 72);
  CHECK(single_task_bins_past_a_third == 3);
  CHECK(narrow_tall_rows == 6);
  CHECK(thin_rows == 1);

  std::optional<StructuredGuess> relaxed = structured_gt70(ins, 77);
  REQUIRE(relaxed.has_value());
  CHECK(relaxed->subcase == "few-fat");
  CHECK(relaxed->structured.solution.bins.size() <= 3 * 77);
  CHECK(!find_tag_violation(ins, relaxed->structured).has_value());
  CHECK(verify_solution(ins, relaxed->structured.solution).ok());
}

TEST_CASE("the certificate holds just past the regime boundary") {
  std::vector<Task> tasks;
  for (int i = 1; i <= 284; ++i) tasks.push_back({i, 5, 5});
  Instance ins = instance_of(10, 10, std::move(tasks));

  CHECK(area_lower_bound(ins) == 71);

  GeneralSolveResult solved = solve_general(ins);
  CHECK(verify_solution(ins, solved.solution).ok());
  CHECK(solved.report.regime == GuessRegime::Gt70);
  CHECK(solved.report.subcase == "many-fat");
  CHECK(solved.report.accepted_guess == 71);
  CHECK(solved.report.final_bins == 71);
  CHECK(solved.report.guarantee_certificate);
}

TEST_CASE("feasible bins respect the fat task bounds") {
  std::vector<Task> quad = {{1, 5, 5}, {2, 5, 5}, {3, 5, 5}, {4, 5, 5}};
  Instance tiling = instance_of(12, 12, quad);
  Bin four;
  four.placements = {{quad[0], 1}, {quad[1], 1}, {quad[2], 6}, {quad[3], 6}};
  StructuralReport report = check_fat_task_bounds(tiling, four);
  CHECK(report.fat_count == 4);
  CHECK(report.four_fat.premise);
  CHECK(report.four_fat.conclusion);
  CHECK(!report.four_fat.counterexample);
  CHECK(!report.three_fat_tall_heavy.premise);
  CHECK(!report.three_fat_wide_heavy.premise);
  CHECK(!report.any_counterexample);

  std::vector<Task> mixed = {{1, 2, 7}, {2, 2, 2}};
  Instance no_fat = instance_of(12, 12, mixed);
  Bin sparse;
  sparse.placements = {{mixed[0], 1}, {mixed[1], 5}};
  report = check_fat_task_bounds(no_fat, sparse);
  CHECK(report.fat_count == 0);
  CHECK(!report.three_fat_tall_heavy.premise);
  CHECK(!report.three_fat_wide_heavy.premise);
  CHECK(!report.four_fat.premise);
  CHECK(report.four_fat.conclusion);
  CHECK(!report.any_counterexample);

  std::vector<Task> rows = {{1, 12, 7}, {2, 12, 7}};
  Instance overload = instance_of(12, 12, rows);
  Bin stacked;
  stacked.placements = {{rows[0], 1}, {rows[1], 1}};
  CHECK_THROWS_AS(check_fat_task_bounds(overload, stacked), DomainError);

  std::vector<Task> one = {{1, 5, 5}};
  Instance tiny = instance_of(12, 12, one);
  Bin sticking_out;
  sticking_out.placements = {{one[0], 10}};
  CHECK_THROWS_AS(check_fat_task_bounds(tiny, sticking_out), DomainError);
}

TEST_CASE("random feasible bins never violate the fat task bounds") {
  SplitMix rng{424242};
  int violations = 0;
  long long fat_seen = 0;
  for (int round = 0; round < 10000; ++round) {
    Len slots = 6 + rng.below(10);
    Len capacity = 6 + rng.below(10);
    LoadProfile profile(slots);
    std::vector<Task> tasks;
    Bin bin;
    int id = 1;
    for (int attempt = 0; attempt < 8; ++attempt) {
      Len width = 1 + rng.below(slots);
      Len height = 1 + rng.below(capacity);
      if (rng.below(2) == 0) {
        width = slots / 3 + 1 + rng.below(slots / 2 - slots / 3);
        height = capacity / 3 + 1 + rng.below(capacity / 2 - capacity / 3);
      }
      Len start = 1 + rng.below(slots - width + 1);
      if (profile.max_in(start, start + width - 1) + height > capacity) continue;
      profile.add(start, start + width - 1, height);
      Task task{id++, width, height};
      tasks.push_back(task);
      bin.placements.push_back({task, start});
    }
    Instance ins = instance_of(slots, capacity, std::move(tasks));
    StructuralReport report = check_fat_task_bounds(ins, bin);
    if (report.any_counterexample) ++violations;
    fat_seen += static_cast<long long>(report.fat_count);
  }
  CHECK(violations == 0);
  CHECK(fat_seen > 500);
}

}  // namespace
}  // namespace dbp
