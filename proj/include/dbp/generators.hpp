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

#ifndef DBP_GENERATORS_HPP_
#define DBP_GENERATORS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "dbp/model.hpp"

namespace dbp {

// Instance builders: two reductions from 3-Partition that make single-bin
// feasibility as hard as the partition decision, the fixed 21x21 square
// fixture whose demand allocation beats any geometric packing, and seeded
// random families for benchmarks.

struct ThreePartitionInput {
  std::vector<long long> numbers;  // 3z positive integers
  long long z = 0;                 // group count; sum(numbers) must divide by z
};

struct ShortReduction {
  Instance instance;
  long long target = 0;  // per-group sum; also the timeline length
  // Input numbers outside the open interval (target/4, target/2). A yes/no
  // equivalence with 3-Partition is only promised when this is empty.
  std::vector<long long> out_of_range;
};

// One unit-height task of width a per input number, capacity z, timeline
// sum/z. All tasks fit one bin exactly when the numbers split into z groups
// of equal sum. Throws DomainError when the input shape is wrong or the sum
// is not divisible by z.
ShortReduction gen_3part_short(const ThreePartitionInput& input);

struct SquaresReductionParams {
  long long n = 0;      // group count after padding
  long long x = 0;      // solves x*(x+1) - 1 = n
  long long scale = 4;  // factor applied to every input number
  long long b = 0;      // scaled per-group target sum
  long long d = 0;      // 3*b^3 + b, the side-length unit
  long long side = 0;   // timeline length and capacity, x*(x+2)*d
  std::size_t structure_count = 0;
  std::size_t partition_count = 0;
  std::size_t enforcer_count = 0;
};

struct SquaresReduction {
  Instance instance;
  SquaresReductionParams params;
  std::vector<std::string> warnings;
};

// Square-task reduction on a square bin of side x*(x+2)*d: structure squares
// of sides n*d, (x+1)*d, and x*d wall off a corridor, partition squares of
// side b^3 + a carry the numbers, and enforcer squares of side 3*b^3 pad the
// corridor. Inputs are scaled by four so the dummy groups {b/2-2, b/4+1,
// b/4+1} appended to reach a group count of the form x*(x+1)-1 stay integral.
// The enforcer count 2n/3 is never integral for such n; it is floored and
// flagged in warnings. Throws DomainError on malformed input or when the
// square bin outgrows 64-bit slot arithmetic.
SquaresReduction gen_3part_squares(const ThreePartitionInput& input);

struct GapFixture {
  Instance instance;  // 21x21 bin; squares 10, 10, 8, 8, 5 and nine of 3
  Solution witness;   // all fourteen squares demand-allocated into one bin
};

// The fixed fixture separating demand allocation from geometric packing: the
// witness is feasible by per-slot loads, yet no overlap-free placement of the
// same squares into a 21x21 region exists.
GapFixture gen_gap();

enum class RandomFamily {
  ShortTasks,  // heights up to a ninth of the capacity
  Squares,     // width = height, up to the smaller bin side
  Mixed,       // widths and heights uniform over the full ranges
};

// Deterministic seeded instance: the stream is splitmix64, so a seed yields
// the same instance on every platform. Throws DomainError on non-positive
// parameters or when the family is unsatisfiable (ShortTasks with C < 9).
Instance gen_random(RandomFamily family, std::size_t n, Len slots, Len capacity,
                    std::uint64_t seed);

}  // namespace dbp

#endif  // DBP_GENERATORS_HPP_
