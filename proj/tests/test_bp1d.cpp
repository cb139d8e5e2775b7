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

#include "dbp/bp1d.hpp"
#include "dbp/errors.hpp"
#include "doctest.h"

namespace dbp {
namespace {

struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long long below(long long n) {
    return static_cast<long long>(next() % static_cast<std::uint64_t>(n));
  }
};

// Every index exactly once, every group within capacity.
void check_valid_packing(const Groups& groups, const std::vector<Rat>& sizes,
                         const Rat& capacity) {
  std::vector<int> seen(sizes.size(), 0);
  for (const auto& group : groups) {
    Rat sum(0);
    for (std::size_t i : group) {
      REQUIRE(i < sizes.size());
      ++seen[i];
      sum = sum + sizes[i];
    }
    CHECK(sum <= capacity);
  }
  for (int c : seen) CHECK(c == 1);
}

// Minimum number of blocks over all set partitions with block sums within
// capacity. Exponential, for cross-checking only.
std::size_t best_partition(const std::vector<long long>& sizes, long long capacity) {
  std::size_t best = sizes.size() + 1;
  std::vector<long long> bins;
  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (bins.size() >= best) return;
    if (i == sizes.size()) {
      best = bins.size();
      return;
    }
    const std::size_t open = bins.size();
    for (std::size_t b = 0; b < open; ++b) {
      if (bins[b] + sizes[i] <= capacity) {
        bins[b] += sizes[i];
        self(self, i + 1);
        bins[b] -= sizes[i];
      }
    }
    bins.push_back(sizes[i]);
    self(self, i + 1);
    bins.pop_back();
  };
  dfs(dfs, 0);
  return best;
}

TEST_CASE("first-fit decreasing packs by size with first-fit placement") {
  std::vector<Rat> sizes = {Rat(6), Rat(5), Rat(4), Rat(3), Rat(2), Rat(1)};
  Groups groups = ffd(sizes, Rat(10));
  REQUIRE(groups.size() == 3);
  CHECK(groups[0] == std::vector<std::size_t>{0, 2});
  CHECK(groups[1] == std::vector<std::size_t>{1, 3, 4});
  CHECK(groups[2] == std::vector<std::size_t>{5});
  check_valid_packing(groups, sizes, Rat(10));
  CHECK_THROWS_AS(ffd({Rat(11)}, Rat(10)), DomainError);
}

TEST_CASE("exact packing beats first-fit decreasing when it is suboptimal") {
  std::vector<Rat> sizes = {Rat(5), Rat(5), Rat(4), Rat(4), Rat(3), Rat(3), Rat(3), Rat(3)};
  CHECK(ffd(sizes, Rat(10)).size() == 4);
  ExactBpResult exact = exact_bp(sizes, Rat(10));
  CHECK(exact.status == SearchStatus::Proven);
  CHECK(exact.bin_count == 3);
  check_valid_packing(exact.groups, sizes, Rat(10));
}

TEST_CASE("exact packing degrades to an upper bound when out of budget") {
  std::vector<Rat> sizes = {Rat(5), Rat(5), Rat(4), Rat(4), Rat(3), Rat(3), Rat(3), Rat(3)};
  ExactBpResult exact = exact_bp(sizes, Rat(10), 1);
  CHECK(exact.status == SearchStatus::Unknown);
  CHECK(exact.bin_count == 4);
  check_valid_packing(exact.groups, sizes, Rat(10));
}

TEST_CASE("exact packing matches brute-force partition search") {
  SplitMix rng{42};
  for (int round = 0; round < 40; ++round) {
    long long cap = 6 + rng.below(10);
    int n = 2 + static_cast<int>(rng.below(7));
    std::vector<long long> raw;
    std::vector<Rat> sizes;
    for (int i = 0; i < n; ++i) {
      raw.push_back(1 + rng.below(cap));
      sizes.push_back(Rat(raw.back()));
    }
    ExactBpResult exact = exact_bp(sizes, Rat(cap));
    REQUIRE(exact.status == SearchStatus::Proven);
    CHECK(exact.bin_count == best_partition(raw, cap));
    check_valid_packing(exact.groups, sizes, Rat(cap));
  }
}

TEST_CASE("near-optimal packer stays within its ratio and packs validly") {
  SplitMix rng{7};
  Rat eps(1, 2);
  for (int round = 0; round < 20; ++round) {
    long long cap = 20 + rng.below(30);
    int n = 5 + static_cast<int>(rng.below(20));
    std::vector<Rat> sizes;
    for (int i = 0; i < n; ++i) sizes.push_back(Rat(1 + rng.below(cap)));
    AptasResult packed = aptas_bp(sizes, Rat(cap), eps);
    check_valid_packing(packed.groups, sizes, Rat(cap));
    CHECK(packed.certified);
    ExactBpResult exact = exact_bp(sizes, Rat(cap));
    if (exact.status == SearchStatus::Proven) {
      CHECK(Rat(static_cast<long long>(packed.groups.size())) <=
            (Rat(1) + eps) * Rat(static_cast<long long>(exact.bin_count)) + Rat(1));
    }
  }
  CHECK_THROWS_AS(aptas_bp({Rat(1)}, Rat(2), Rat(0)), DomainError);
  CHECK_THROWS_AS(aptas_bp({Rat(1)}, Rat(2), Rat(2, 3)), DomainError);
}

TEST_CASE("near-optimal packer handles the tight small epsilon used upstream") {
  std::vector<Rat> sizes;
  SplitMix rng{99};
  for (int i = 0; i < 60; ++i) sizes.push_back(Rat(1 + rng.below(50)));
  AptasResult packed = aptas_bp(sizes, Rat(50), Rat(1, 55));
  check_valid_packing(packed.groups, sizes, Rat(50));
  AptasResult packed70 = aptas_bp(sizes, Rat(50), Rat(1, 70));
  check_valid_packing(packed70.groups, sizes, Rat(50));
}

TEST_CASE("pack-all fills fixed bins of mixed capacities") {
  MkpResult r = mkp_pack_all({Rat(5), Rat(5), Rat(3)}, {Rat(10), Rat(4)});
  REQUIRE(r.feasible);
  CHECK(r.status == SearchStatus::Proven);
  REQUIRE(r.assignment.size() == 3);
  std::vector<Rat> load(2, Rat(0));
  load[r.assignment[0]] = load[r.assignment[0]] + Rat(5);
  load[r.assignment[1]] = load[r.assignment[1]] + Rat(5);
  load[r.assignment[2]] = load[r.assignment[2]] + Rat(3);
  CHECK(load[0] <= Rat(10));
  CHECK(load[1] <= Rat(4));
}

TEST_CASE("pack-all accepts exact fits and honors the slack reserve") {
  MkpResult exact_fit = mkp_pack_all({Rat(7), Rat(3)}, {Rat(10)});
  CHECK(exact_fit.feasible);
  MkpResult reserved = mkp_pack_all({Rat(7), Rat(3)}, {Rat(10)}, Rat(1));
  CHECK_FALSE(reserved.feasible);
  CHECK(reserved.status == SearchStatus::Proven);
}

TEST_CASE("pack-all proves infeasibility by search") {
  MkpResult r = mkp_pack_all({Rat(7), Rat(7), Rat(4)}, {Rat(9), Rat(9)});
  CHECK_FALSE(r.feasible);
  CHECK(r.status == SearchStatus::Proven);
}

TEST_CASE("pack-all handles fractional capacities") {
  MkpResult r = mkp_pack_all({Rat(3), Rat(5, 2)}, {Rat(4), Rat(5, 2)});
  REQUIRE(r.feasible);
  CHECK(r.assignment == std::vector<std::size_t>{0, 1});
}

}  // namespace
}  // namespace dbp
