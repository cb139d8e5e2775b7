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
#include "dbp/solver_squares.hpp"
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

Instance squares_of(Len slots, Len capacity, const std::vector<Len>& sides) {
  std::vector<Task> tasks;
  tasks.reserve(sides.size());
  for (std::size_t i = 0; i < sides.size(); ++i) {
    tasks.push_back({static_cast<int>(i + 1), sides[i], sides[i]});
  }
  return instance_of(slots, capacity, std::move(tasks));
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

TEST_CASE("bin shape classification picks exactly one regime") {
  CHECK(classify_square_case(4, 3) == SquareCase::WideBin);
  CHECK(classify_square_case(8, 6) == SquareCase::WideBin);
  CHECK(classify_square_case(7, 6) == SquareCase::NearSquareWide);
  CHECK(classify_square_case(6, 6) == SquareCase::NearSquareWide);
  CHECK(classify_square_case(7, 8) == SquareCase::NearSquareTall);
  CHECK(classify_square_case(7, 9) == SquareCase::NearSquareTall);
  CHECK(classify_square_case(6, 8) == SquareCase::TallBin);
  CHECK(classify_square_case(2, 9) == SquareCase::TallBin);
}

TEST_CASE("nine-group packing shelves nine squares per bin") {
  std::vector<Task> nine;
  for (int i = 1; i <= 9; ++i) nine.push_back({i, 4, 4});
  CHECK(pack_nine_groups(nine, 12, 12).size() == 1);

  std::vector<Task> ten = nine;
  ten.push_back({10, 4, 4});
  CHECK(pack_nine_groups(ten, 12, 12).size() == 2);

  CHECK(pack_nine_groups({}, 12, 12).empty());

  CHECK_THROWS_AS(pack_nine_groups({{1, 3, 3}}, 12, 12), DomainError);
  CHECK_THROWS_AS(pack_nine_groups({{1, 5, 5}}, 12, 12), DomainError);
  CHECK_THROWS_AS(pack_nine_groups({{1, 4, 4}}, 13, 12), DomainError);
}

TEST_CASE("leftmost fit packs corner cases tightly") {
  std::vector<Task> four;
  for (int i = 1; i <= 4; ++i) four.push_back({i, 5, 5});
  CHECK(leftmost_fit_big_squares(four, 10, 10).size() == 1);

  std::vector<Task> two = {{1, 6, 6}, {2, 6, 6}};
  CHECK(leftmost_fit_big_squares(two, 10, 10).size() == 2);

  CHECK_THROWS_AS(leftmost_fit_big_squares({{1, 3, 3}}, 10, 10), DomainError);
  CHECK_THROWS_AS(leftmost_fit_big_squares({{1, 5, 5}}, 11, 10), DomainError);
  CHECK_THROWS_AS(leftmost_fit_big_squares({{1, 5, 4}}, 10, 10), DomainError);
}

TEST_CASE("leftmost fit matches the exact optimum for big squares") {
  SplitMix rng{91556801ULL};
  for (int round = 0; round < 30; ++round) {
    const Len c = 6 + rng.below(15);
    const int n = 1 + static_cast<int>(rng.below(7));
    std::vector<Len> sides;
    for (int i = 0; i < n; ++i) {
      sides.push_back(c / 3 + 1 + rng.below(c - c / 3));
    }
    Instance ins = squares_of(c, c, sides);
    std::vector<Bin> bins = leftmost_fit_big_squares(ins.tasks, c, c);
    Solution sol;
    sol.bins = bins;
    REQUIRE(verify_solution(ins, sol).ok());
    CHECK(bins.size() == oracle_optimum(ins));
  }
}

TEST_CASE("square-bin solver handles edge inputs") {
  CHECK(solve_squares_eq(squares_of(9, 9, {})).solution.bins.empty());

  SquaresSolveResult one = solve_squares_eq(squares_of(9, 9, {7}));
  CHECK(one.solution.bins.size() == 1);
  CHECK(one.report.guarantee_certificate);

  CHECK_THROWS_AS(solve_squares_eq(squares_of(10, 9, {3})), DomainError);
  CHECK_THROWS_AS(solve_squares_eq(instance_of(9, 9, {{1, 3, 2}})), DomainError);
}

TEST_CASE("square-bin solver stays within twice the optimum on the interlocked fixture") {
  const std::vector<Len> sides = {10, 10, 8, 8, 5, 3, 3, 3, 3, 3, 3, 3, 3, 3};
  Instance ins = squares_of(21, 21, sides);

  FeasibilityOutcome one_bin = single_bin_feasible(ins);
  REQUIRE(one_bin.status == SearchStatus::Proven);
  REQUIRE(one_bin.feasible);

  SquaresSolveResult res = solve_squares_eq(ins);
  REQUIRE(verify_solution(ins, res.solution).ok());
  CHECK(res.solution.bins.size() >= 1);
  CHECK(res.solution.bins.size() <= 2);
  CHECK(res.report.guarantee_certificate);
}

TEST_CASE("square-bin solver stays within twice the exact optimum") {
  SplitMix rng{77003191ULL};
  for (int round = 0; round < 40; ++round) {
    const Len c = 4 + rng.below(18);
    const int n = 1 + static_cast<int>(rng.below(8));
    std::vector<Len> sides;
    for (int i = 0; i < n; ++i) sides.push_back(1 + rng.below(c));
    Instance ins = squares_of(c, c, sides);

    SquaresSolveResult res = solve_squares_eq(ins);
    REQUIRE(verify_solution(ins, res.solution).ok());
    CHECK(res.report.final_bins == res.solution.bins.size());
    CHECK(res.solution.bins.size() <= 2 * oracle_optimum(ins));
  }
}

TEST_CASE("general-bin solver reduces to first fit when every square is small") {
  std::vector<Len> sides(30, 3);
  Instance ins = squares_of(20, 10, sides);
  SquaresSolveResult res = solve_squares_general(ins);
  REQUIRE(verify_solution(ins, res.solution).ok());
  const long long area = 30 * 9;
  const long long cell = 20 * 10;
  CHECK(res.solution.bins.size() <= static_cast<std::size_t>((2 * area + cell - 1) / cell));
  CHECK(res.report.square_case == SquareCase::WideBin);
  CHECK(res.report.guarantee_certificate);
}

TEST_CASE("general-bin and square-bin solvers agree on a shared fixture") {
  Instance ins = squares_of(12, 12, {6, 5, 4, 4, 3, 2});
  SquaresSolveResult eq = solve_squares_eq(ins);
  SquaresSolveResult general = solve_squares_general(ins);
  REQUIRE(verify_solution(ins, eq.solution).ok());
  REQUIRE(verify_solution(ins, general.solution).ok());
  CHECK(general.report.square_case == SquareCase::NearSquareWide);
  const std::size_t opt = oracle_optimum(ins);
  CHECK(eq.solution.bins.size() <= 2 * opt);
  CHECK(general.solution.bins.size() <= 2 * opt);
}

TEST_CASE("general-bin solver stays within twice the exact optimum in all regimes") {
  SplitMix rng{40112233ULL};
  for (int round = 0; round < 40; ++round) {
    Len capacity = 0;
    Len slots = 0;
    SquareCase expected = SquareCase::WideBin;
    switch (round / 10) {
      case 0:
        capacity = 3 + rng.below(8);
        slots = (4 * capacity + 2) / 3 + rng.below(10);
        expected = SquareCase::WideBin;
        break;
      case 1:
        capacity = 6 + rng.below(9);
        slots = capacity + rng.below((4 * capacity - 1) / 3 - capacity + 1);
        expected = SquareCase::NearSquareWide;
        break;
      case 2: {
        capacity = 8 + rng.below(10);
        const Len low = 3 * capacity / 4 + 1;
        slots = low + rng.below(capacity - low);
        expected = SquareCase::NearSquareTall;
        break;
      }
      default:
        capacity = 9 + rng.below(10);
        slots = 2 + rng.below(3 * capacity / 4 - 1);
        expected = SquareCase::TallBin;
        break;
    }
    REQUIRE(classify_square_case(slots, capacity) == expected);

    const Len side_cap = std::min(slots, capacity);
    const int n = 1 + static_cast<int>(rng.below(8));
    std::vector<Len> sides;
    for (int i = 0; i < n; ++i) sides.push_back(1 + rng.below(side_cap));
    Instance ins = squares_of(slots, capacity, sides);

    SquaresSolveResult res = solve_squares_general(ins);
    REQUIRE(verify_solution(ins, res.solution).ok());
    CHECK(res.report.square_case == expected);
    CHECK(res.solution.bins.size() <= 2 * oracle_optimum(ins));
  }
}

TEST_CASE("general-bin solver packs a wide-bin interval reduction at scale") {
  std::vector<Len> sides(14, 8);
  sides.insert(sides.end(), 588, 7);
  Instance ins = squares_of(25, 21, sides);
  REQUIRE(classify_square_case(25, 21) == SquareCase::NearSquareWide);

  SquaresSolveResult res = solve_squares_general(ins);
  REQUIRE(verify_solution(ins, res.solution).ok());
  CHECK(res.report.interval_packing_method == "first-fit-decreasing");
  CHECK(res.report.accepted_guess >= 56);
  CHECK(res.report.guarantee_certificate);
}

TEST_CASE("general-bin solver packs a tall-bin row reduction at scale") {
  std::vector<Len> sides(14, 8);
  sides.insert(sides.end(), 588, 7);
  Instance ins = squares_of(21, 25, sides);
  REQUIRE(classify_square_case(21, 25) == SquareCase::NearSquareTall);

  SquaresSolveResult res = solve_squares_general(ins);
  REQUIRE(verify_solution(ins, res.solution).ok());
  CHECK(res.report.interval_packing_method == "first-fit-decreasing");
  CHECK(res.report.accepted_guess >= 56);
  CHECK(res.report.guarantee_certificate);
}

}  // namespace
}  // namespace dbp
