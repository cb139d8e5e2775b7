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

#ifndef DBP_BP1D_HPP_
#define DBP_BP1D_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "dbp/rational.hpp"
#include "dbp/search.hpp"

namespace dbp {

// One-dimensional bin packing helpers. Sizes and capacities are exact
// rationals; internally everything is scaled to integers over a common
// denominator.

// groups[b] lists the indices of the input sizes packed into bin b.
using Groups = std::vector<std::vector<std::size_t>>;

// First-fit decreasing. Throws DomainError when a size exceeds the capacity.
Groups ffd(const std::vector<Rat>& sizes, const Rat& capacity);

struct ExactBpResult {
  SearchStatus status = SearchStatus::Unknown;
  std::size_t bin_count = 0;  // optimal if Proven, else the best packing found
  Groups groups;
  long long nodes = 0;
};

// Branch and bound over bin assignments, seeded with the first-fit-decreasing
// packing. Proven means `groups` uses the minimum number of bins; Unknown
// means the node budget ran out and `groups` is only an upper bound.
ExactBpResult exact_bp(const std::vector<Rat>& sizes, const Rat& capacity,
                       long long node_budget = 2'000'000);

struct AptasResult {
  Groups groups;
  bool certified = false;  // bin count confirmed <= (1+eps) * optimum + 1
  std::string method;      // "rounded-exact" or "rounded-ffd"
};

// Packs into at most (1 + eps) * OPT + 1 bins for eps in (0, 1/2]: the
// largest sizes are grouped, rounded up within each group, solved exactly on
// the rounded values, then the small sizes are filled in first-fit. The ratio
// claim is re-checked against a lower bound after packing; when that check is
// inconclusive the packing is still returned with certified = false.
AptasResult aptas_bp(const std::vector<Rat>& sizes, const Rat& capacity, const Rat& epsilon);

struct MkpResult {
  SearchStatus status = SearchStatus::Unknown;
  bool feasible = false;
  std::vector<std::size_t> assignment;  // item index -> bin index when feasible
  long long nodes = 0;
};

// Decides whether all items fit into the given bins (capacities may differ)
// and returns one assignment if so. Declares infeasibility outright when the
// total size exceeds the total capacity minus `slack`; otherwise searches
// exhaustively. Unknown means the node budget ran out before a decision.
MkpResult mkp_pack_all(const std::vector<Rat>& sizes, const std::vector<Rat>& capacities,
                       const Rat& slack = Rat(0), long long node_budget = 2'000'000);

}  // namespace dbp

#endif  // DBP_BP1D_HPP_
