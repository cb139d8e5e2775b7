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

#ifndef DBP_PROFILE_HPP_
#define DBP_PROFILE_HPP_

#include <vector>

#include "dbp/model.hpp"

namespace dbp {

// Per-slot load of one bin, run-length encoded. Slot indices are 1-based.
// Reduction-built instances have slot counts in the millions, so nothing in
// the solver paths may materialize a per-slot array; dense() exists for tests
// and rendering only.
class LoadProfile {
 public:
  struct Run {
    Len start = 0;        // first slot of the run
    long long load = 0;   // load on every slot of the run
  };

  explicit LoadProfile(Len slot_count);

  Len slot_count() const { return slot_count_; }

  long long load_at(Len slot) const;
  // Maximum load over slots [from, to], inclusive. Requires from <= to.
  long long max_in(Len from, Len to) const;
  // Adds `amount` to every slot in [from, to], inclusive.
  void add(Len from, Len to, long long amount);
  // First slot strictly after `slot` where the load differs from load_at(slot),
  // or 0 if the load is constant through the last slot.
  Len next_change_after(Len slot) const;

  const std::vector<Run>& runs() const { return runs_; }
  std::vector<long long> dense() const;
  long long total_load() const;

 private:
  std::size_t run_index_of(Len slot) const;

  Len slot_count_;
  std::vector<Run> runs_;  // sorted by start; adjacent runs have distinct loads
};

// Profile of a bin within an instance. Throws DomainError naming the first
// task that sticks out past the last slot or starts before slot 1.
LoadProfile load_profile(const Instance& instance, const Bin& bin);

// True when the loads are non-increasing from slot 1 to the last slot.
bool is_sorted_profile(const LoadProfile& profile);

}  // namespace dbp

#endif  // DBP_PROFILE_HPP_
