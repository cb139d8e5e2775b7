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

#ifndef DBP_ORACLE_HPP_
#define DBP_ORACLE_HPP_

#include <optional>
#include <vector>

#include "dbp/model.hpp"
#include "dbp/search.hpp"

namespace dbp {

// Exhaustive searches for desk-scale instances. Results are either proven or
// reported Unknown when the node budget runs out; they are never guesses.

struct FeasibilityOutcome {
  SearchStatus status = SearchStatus::Unknown;
  bool feasible = false;
  std::optional<Bin> witness;  // a valid placement when feasible
  long long nodes = 0;
};

// Can all tasks of the instance share one bin? The search branches on which
// task starts next and puts it at its earliest feasible start; every order of
// the tasks is explored, so every left-shifted schedule is reachable
// (cross-checked in tests against trying every slot for every task).
FeasibilityOutcome single_bin_feasible(const Instance& instance,
                                       const SearchBudget& budget = {});

struct OptOutcome {
  SearchStatus status = SearchStatus::Unknown;
  std::size_t bin_count = 0;  // optimal if Proven, else best found (0 = none)
  std::optional<Solution> solution;
  long long nodes = 0;
};

// Minimum number of bins, by trying increasing bin counts and searching all
// task-to-bin assignments; per-bin feasibility runs through
// single_bin_feasible with results memoized per task subset. Limited to 64
// tasks. Unknown carries the best packing found, if any.
OptOutcome exact_demand_bp(const Instance& instance, const SearchBudget& budget = {});

struct GeoPlacement {
  Task task;
  Len x = 0;  // left edge, 0-based
  Len y = 0;  // bottom edge, 0-based
};

struct GeometricOutcome {
  SearchStatus status = SearchStatus::Unknown;
  bool feasible = false;
  std::optional<std::vector<GeoPlacement>> witness;
  long long nodes = 0;
};

// Can the rectangles be packed, without overlap and without rotation, into a
// width x height box? Exact: any feasible packing can be normalized to
// integral coordinates, which the search enumerates exhaustively.
GeometricOutcome geometric_feasible(const std::vector<Task>& rects, Len width, Len height,
                                    const SearchBudget& budget = {});

}  // namespace dbp

#endif  // DBP_ORACLE_HPP_
