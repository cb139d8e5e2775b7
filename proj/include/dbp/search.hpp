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

#ifndef DBP_SEARCH_HPP_
#define DBP_SEARCH_HPP_

namespace dbp {

// Exhaustive searches either prove their answer or run out of budget.
// They never guess: Unknown means "not decided within budget".
enum class SearchStatus { Proven, Unknown };

struct SearchBudget {
  long long max_nodes = 50'000'000;
};

}  // namespace dbp

#endif  // DBP_SEARCH_HPP_
