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

#include <cstdint>
#include <vector>

#include "dbp/errors.hpp"
#include "dbp/model.hpp"
#include "dbp/oracle.hpp"
#include "dbp/solver_short.hpp"
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

TEST_CASE("short solver handles the empty instance") {
  Instance ins = instance_of(5, 9, {});
  ShortSolveResult res = solve_short(ins);
  CHECK(res.solution.bins.empty());
  CHECK(res.report.final_bins == 0);
  CHECK(res.report.guarantee_certificate);
}

TEST_CASE("short solver rejects tasks taller than a ninth of the capacity") {
  Instance ins = instance_of(10, 8, {{1, 3, 1}});
  CHECK_THROWS_AS(solve_short(ins), DomainError);
}

TEST_CASE("short solver stacks identical full-width slivers nine per bin") {
  std::vector<Task> tasks;
  for (int i = 1; i <= 20; ++i) tasks.push_back({i, 12, 1});
  Instance ins = instance_of(12, 9, tasks);
  ShortSolveResult res = solve_short(ins);
  REQUIRE(verify_solution(ins, res.solution).ok());
  CHECK(res.solution.bins.size() == 3);
  CHECK(res.report.final_bins == 3);
  CHECK(res.report.accepted_guess == 3);
  CHECK(res.report.guarantee_certificate);
}

TEST_CASE("short solver stays within twice the exact optimum") {
  SplitMix rng{20260817ULL};
  for (int round = 0; round < 60; ++round) {
    Len slots = 4 + rng.below(12);
    Len capacity = 9 + rng.below(18);
    int n = 1 + static_cast<int>(rng.below(8));
    std::vector<Task> tasks;
    for (int i = 1; i <= n; ++i) {
      Len w = 1 + rng.below(slots);
      Len h = 1 + rng.below(capacity / 9);
      tasks.push_back({i, w, h});
    }
    Instance ins = instance_of(slots, capacity, tasks);

    ShortSolveResult res = solve_short(ins);
    REQUIRE(verify_solution(ins, res.solution).ok());
    CHECK(res.report.final_bins == res.solution.bins.size());
    CHECK(res.report.guarantee_certificate);

    const std::size_t lb = static_cast<std::size_t>(area_lower_bound(ins));
    REQUIRE(!res.report.guesses_tried.empty());
    CHECK(res.report.guesses_tried.front() == lb);
    CHECK(res.report.accepted_guess >= lb);

    std::size_t g = res.report.accepted_guess;
    CHECK(res.report.structured_bins <= g + (g - 1 + 8) / 9 + 1);

    OptOutcome opt = exact_demand_bp(ins);
    REQUIRE(opt.status == SearchStatus::Proven);
    CHECK(res.solution.bins.size() <= 2 * opt.bin_count);
  }
}

}  // namespace
}  // namespace dbp
