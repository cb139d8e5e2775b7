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

#ifndef DBP_STRUCTURED_HPP_
#define DBP_STRUCTURED_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "dbp/model.hpp"
#include "dbp/rational.hpp"

namespace dbp {

// Every bin a structured pre-pass emits carries one of two promises:
//   AlphaFull:     covered area is at least alpha * slots * capacity
//   SortedProfile: the load profile is non-increasing from slot 1
// The follow-up fill phase relies on these promises, so they are checked,
// not trusted.
enum class BinTagKind { AlphaFull, SortedProfile };

struct BinTag {
  BinTagKind kind = BinTagKind::SortedProfile;
  Rat alpha;  // meaningful only for AlphaFull

  static BinTag alpha_full(Rat alpha) { return BinTag{BinTagKind::AlphaFull, alpha}; }
  static BinTag sorted_profile() { return BinTag{BinTagKind::SortedProfile, Rat(0)}; }
};

struct StructuredSolution {
  Solution solution;
  Rat k;  // bin count is promised to be at most k * OPT
  std::vector<BinTag> tags;  // one per bin, same order
};

// Index of the first bin whose tag promise does not hold, if any.
std::optional<std::size_t> find_tag_violation(const Instance& instance,
                                              const StructuredSolution& structured);

}  // namespace dbp

#endif  // DBP_STRUCTURED_HPP_
