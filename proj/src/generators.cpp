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

#include "dbp/generators.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "dbp/errors.hpp"

namespace dbp {
namespace {

// Largest side such that a square bin of that side keeps slots * capacity
// within 64-bit range.
constexpr long long kMaxSquareSide = 3037000499LL;

long long checked_group_sum(const ThreePartitionInput& input) {
  if (input.z < 1) throw DomainError("the group count must be positive");
  if (input.numbers.size() != static_cast<std::size_t>(3 * input.z)) {
    throw DomainError("expected " + std::to_string(3 * input.z) + " numbers, got " +
                      std::to_string(input.numbers.size()));
  }
  long long sum = 0;
  for (long long a : input.numbers) {
    if (a < 1) throw DomainError("every number must be positive");
    sum += a;
  }
  if (sum % input.z != 0) {
    throw DomainError("the numbers sum to " + std::to_string(sum) +
                      ", which does not divide into " + std::to_string(input.z) + " groups");
  }
  return sum / input.z;
}

std::vector<long long> out_of_range_values(const std::vector<long long>& numbers,
                                           long long target) {
  std::vector<long long> out;
  for (long long a : numbers) {
    if (4 * a <= target || 2 * a >= target) out.push_back(a);
  }
  return out;
}

struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  Len range(Len hi) { return 1 + static_cast<Len>(next() % static_cast<std::uint64_t>(hi)); }
};

}  // namespace

ShortReduction gen_3part_short(const ThreePartitionInput& input) {
  ShortReduction out;
  out.target = checked_group_sum(input);
  out.out_of_range = out_of_range_values(input.numbers, out.target);

  out.instance.slots = out.target;
  out.instance.capacity = input.z;
  for (std::size_t i = 0; i < input.numbers.size(); ++i) {
    out.instance.tasks.push_back({static_cast<int>(i + 1), input.numbers[i], 1});
  }
  validate_instance(out.instance);
  return out;
}

SquaresReduction gen_3part_squares(const ThreePartitionInput& input) {
  SquaresReduction out;
  long long target = checked_group_sum(input);

  std::vector<long long> scaled;
  scaled.reserve(input.numbers.size());
  for (long long a : input.numbers) scaled.push_back(4 * a);

  SquaresReductionParams& p = out.params;
  p.scale = 4;
  p.b = 4 * target;
  p.n = input.z;
  p.x = 1;
  while (p.x * (p.x + 1) - 1 < p.n) ++p.x;
  while (p.n < p.x * (p.x + 1) - 1) {
    scaled.push_back(p.b / 2 - 2);
    scaled.push_back(p.b / 4 + 1);
    scaled.push_back(p.b / 4 + 1);
    ++p.n;
  }

  __int128 cube = static_cast<__int128>(p.b) * p.b * p.b;
  __int128 d_wide = 3 * cube + p.b;
  __int128 side_wide = static_cast<__int128>(p.x) * (p.x + 2) * d_wide;
  if (side_wide > kMaxSquareSide) {
    throw DomainError("the squares reduction needs a square bin wider than " +
                      std::to_string(kMaxSquareSide) +
                      " slots, which exceeds 64-bit slot arithmetic");
  }
  p.d = static_cast<long long>(d_wide);
  p.side = static_cast<long long>(side_wide);

  long long smallest_input = *std::min_element(input.numbers.begin(), input.numbers.end());
  if (p.n > input.z && p.b / 4 + 1 >= 4 * smallest_input) {
    out.warnings.push_back(
        "a dummy number is at least as large as the smallest input number; group "
        "equivalence then rests on equal values being interchangeable");
  }
  if (!out_of_range_values(input.numbers, target).empty()) {
    out.warnings.push_back("input numbers fall outside the open interval (B/4, B/2)");
  }
  std::size_t enforcers = static_cast<std::size_t>(2 * p.n / 3);
  out.warnings.push_back("the enforcer count 2n/3 = 2*" + std::to_string(p.n) +
                         "/3 is not integral and was floored to " + std::to_string(enforcers));

  Instance& ins = out.instance;
  ins.slots = p.side;
  ins.capacity = p.side;
  int id = 1;
  ins.tasks.push_back({id++, p.n * p.d, p.n * p.d});
  for (long long i = 0; i < p.x; ++i) {
    ins.tasks.push_back({id++, (p.x + 1) * p.d, (p.x + 1) * p.d});
  }
  for (long long i = 0; i < p.x + 2; ++i) {
    ins.tasks.push_back({id++, p.x * p.d, p.x * p.d});
  }
  long long cube_ll = static_cast<long long>(cube);
  for (long long a : scaled) {
    ins.tasks.push_back({id++, cube_ll + a, cube_ll + a});
  }
  for (std::size_t i = 0; i < enforcers; ++i) {
    ins.tasks.push_back({id++, 3 * cube_ll, 3 * cube_ll});
  }
  p.structure_count = static_cast<std::size_t>(2 * p.x + 3);
  p.partition_count = scaled.size();
  p.enforcer_count = enforcers;

  validate_instance(ins);
  return out;
}

GapFixture gen_gap() {
  const Len sides[] = {10, 10, 8, 8, 5, 3, 3, 3, 3, 3, 3, 3, 3, 3};
  const Len starts[] = {1, 12, 1, 14, 9, 9, 11, 1, 4, 7, 10, 13, 16, 19};

  GapFixture out;
  out.instance.slots = 21;
  out.instance.capacity = 21;
  Bin bin;
  for (int i = 0; i < 14; ++i) {
    Task task{i + 1, sides[i], sides[i]};
    out.instance.tasks.push_back(task);
    bin.placements.push_back({task, starts[i]});
  }
  out.witness.bins.push_back(std::move(bin));
  validate_instance(out.instance);
  return out;
}

Instance gen_random(RandomFamily family, std::size_t n, Len slots, Len capacity,
                    std::uint64_t seed) {
  if (n < 1 || slots < 1 || capacity < 1) {
    throw DomainError("task count, slots, and capacity must all be positive");
  }
  if (family == RandomFamily::ShortTasks && capacity < 9) {
    throw DomainError("the short-task family needs capacity at least 9");
  }

  SplitMix rng{seed};
  Instance ins;
  ins.slots = slots;
  ins.capacity = capacity;
  for (std::size_t i = 0; i < n; ++i) {
    Task task;
    task.id = static_cast<int>(i + 1);
    switch (family) {
      case RandomFamily::ShortTasks:
        task.width = rng.range(slots);
        task.height = rng.range(capacity / 9);
        break;
      case RandomFamily::Squares:
        task.width = task.height = rng.range(std::min(slots, capacity));
        break;
      case RandomFamily::Mixed:
        task.width = rng.range(slots);
        task.height = rng.range(capacity);
        break;
    }
    ins.tasks.push_back(task);
  }
  validate_instance(ins);
  return ins;
}

}  // namespace dbp
