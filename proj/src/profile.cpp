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

#include "dbp/profile.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dbp/errors.hpp"

namespace dbp {

LoadProfile::LoadProfile(Len slot_count) : slot_count_(slot_count) {
  if (slot_count < 1) throw DomainError("load profile needs at least 1 slot");
  runs_.push_back(Run{1, 0});
}

std::size_t LoadProfile::run_index_of(Len slot) const {
  // Last run with start <= slot.
  auto it = std::upper_bound(runs_.begin(), runs_.end(), slot,
                             [](Len s, const Run& r) { return s < r.start; });
  return static_cast<std::size_t>(it - runs_.begin()) - 1;
}

long long LoadProfile::load_at(Len slot) const {
  if (slot < 1 || slot > slot_count_) {
    throw std::out_of_range("slot " + std::to_string(slot) + " outside [1, " +
                            std::to_string(slot_count_) + "]");
  }
  return runs_[run_index_of(slot)].load;
}

long long LoadProfile::max_in(Len from, Len to) const {
  if (from > to) throw std::invalid_argument("max_in with from > to");
  if (from < 1 || to > slot_count_) {
    throw std::out_of_range("range [" + std::to_string(from) + ", " + std::to_string(to) +
                            "] outside [1, " + std::to_string(slot_count_) + "]");
  }
  std::size_t i = run_index_of(from);
  long long best = runs_[i].load;
  for (++i; i < runs_.size() && runs_[i].start <= to; ++i) {
    best = std::max(best, runs_[i].load);
  }
  return best;
}

void LoadProfile::add(Len from, Len to, long long amount) {
  if (from > to) throw std::invalid_argument("add with from > to");
  if (from < 1 || to > slot_count_) {
    throw std::out_of_range("range [" + std::to_string(from) + ", " + std::to_string(to) +
                            "] outside [1, " + std::to_string(slot_count_) + "]");
  }
  if (amount == 0) return;

  // Split so that `from` and `to + 1` fall on run starts, bump the runs in
  // between, then merge equal neighbours.
  std::vector<Run> next;
  next.reserve(runs_.size() + 2);
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    Len run_start = runs_[i].start;
    Len run_end = (i + 1 < runs_.size()) ? runs_[i + 1].start - 1 : slot_count_;
    long long load = runs_[i].load;
    Len lo = std::max(run_start, from);
    Len hi = std::min(run_end, to);
    if (lo > hi) {
      next.push_back(runs_[i]);
      continue;
    }
    if (run_start < lo) next.push_back(Run{run_start, load});
    next.push_back(Run{lo, load + amount});
    if (hi < run_end) next.push_back(Run{hi + 1, load});
  }
  runs_.clear();
  for (const Run& r : next) {
    if (!runs_.empty() && runs_.back().load == r.load) continue;
    runs_.push_back(r);
  }
}

Len LoadProfile::next_change_after(Len slot) const {
  if (slot < 1 || slot > slot_count_) {
    throw std::out_of_range("slot " + std::to_string(slot) + " outside [1, " +
                            std::to_string(slot_count_) + "]");
  }
  std::size_t i = run_index_of(slot);
  if (i + 1 < runs_.size()) return runs_[i + 1].start;
  return 0;
}

std::vector<long long> LoadProfile::dense() const {
  std::vector<long long> out(static_cast<std::size_t>(slot_count_));
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    Len run_end = (i + 1 < runs_.size()) ? runs_[i + 1].start - 1 : slot_count_;
    for (Len s = runs_[i].start; s <= run_end; ++s) {
      out[static_cast<std::size_t>(s - 1)] = runs_[i].load;
    }
  }
  return out;
}

long long LoadProfile::total_load() const {
  long long sum = 0;
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    Len run_end = (i + 1 < runs_.size()) ? runs_[i + 1].start - 1 : slot_count_;
    sum += runs_[i].load * (run_end - runs_[i].start + 1);
  }
  return sum;
}

LoadProfile load_profile(const Instance& instance, const Bin& bin) {
  LoadProfile profile(instance.slots);
  for (const Placement& p : bin.placements) {
    Len end = p.start + p.task.width - 1;
    if (p.start < 1 || end > instance.slots) {
      throw DomainError("task " + std::to_string(p.task.id) + " at slot " +
                        std::to_string(p.start) + " runs outside [1, " +
                        std::to_string(instance.slots) + "]");
    }
    profile.add(p.start, end, p.task.height);
  }
  return profile;
}

bool is_sorted_profile(const LoadProfile& profile) {
  const auto& runs = profile.runs();
  for (std::size_t i = 1; i < runs.size(); ++i) {
    if (runs[i].load > runs[i - 1].load) return false;
  }
  return true;
}

}  // namespace dbp
