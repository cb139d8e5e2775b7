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

#include "dbp/structured.hpp"

#include "dbp/profile.hpp"
#include "dbp/verify.hpp"

namespace dbp {

std::optional<std::size_t> find_tag_violation(const Instance& instance,
                                              const StructuredSolution& structured) {
  if (structured.tags.size() != structured.solution.bins.size()) {
    return structured.tags.size() < structured.solution.bins.size()
               ? structured.tags.size()
               : structured.solution.bins.size();
  }
  for (std::size_t i = 0; i < structured.solution.bins.size(); ++i) {
    const Bin& bin = structured.solution.bins[i];
    const BinTag& tag = structured.tags[i];
    switch (tag.kind) {
      case BinTagKind::AlphaFull:
        if (bin_fullness(instance, bin) < tag.alpha) return i;
        break;
      case BinTagKind::SortedProfile:
        if (!is_sorted_profile(load_profile(instance, bin))) return i;
        break;
    }
  }
  return std::nullopt;
}

}  // namespace dbp
