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

#include "dbp/first_fit.hpp"

#include <list>
#include <stdexcept>
#include <string>

#include "dbp/errors.hpp"
#include "dbp/profile.hpp"

namespace dbp {

namespace {

// a <= r * b, exactly.
bool le_frac(long long a, const Rat& r, long long b) {
  return static_cast<__int128>(a) * r.den() <= static_cast<__int128>(r.num()) * b;
}

// a > r * b, exactly.
bool gt_frac(long long a, const Rat& r, long long b) {
  return static_cast<__int128>(a) * r.den() > static_cast<__int128>(r.num()) * b;
}

void validate_params(const FitParams& params) {
  if (params.k < Rat(1)) throw DomainError("fit parameter k must be at least 1");
  if (params.delta_h <= Rat(0) || params.delta_h >= Rat(1) || params.delta_w <= Rat(0) ||
      params.delta_w >= Rat(1)) {
    throw DomainError("fit deltas must lie strictly between 0 and 1");
  }
  if (!params.enforce_condition) return;
  Rat one(1);
  if (params.mixed) {
    Rat half(1, 2);
    if (params.delta_h > half || params.delta_w > half ||
        (one - params.delta_h) * params.k < Rat(2) ||
        (one - params.delta_w) * params.k < Rat(2)) {
      throw DomainError("mixed fit parameters break the fill guarantee: need deltas <= 1/2 "
                        "and (1 - delta) >= 2/k");
    }
  } else {
    if ((one - params.delta_h) * (one - params.delta_w) * params.k < one) {
      throw DomainError("fit parameters break the fill guarantee: need "
                        "(1 - delta_h)(1 - delta_w) >= 1/k");
    }
  }
}

void validate_admission(const Task& t, const Instance& ins, const FitParams& params) {
  if (t.height > ins.capacity || t.width > ins.slots) {
    throw DomainError("task " + std::to_string(t.id) + " cannot fit an empty bin");
  }
  if (!params.enforce_condition) return;
  bool short_enough = le_frac(t.height, params.delta_h, ins.capacity);
  bool narrow_enough = le_frac(t.width, params.delta_w, ins.slots);
  if (params.mixed) {
    if ((short_enough || narrow_enough) && 2 * t.height <= ins.capacity &&
        2 * t.width <= ins.slots) {
      return;
    }
    throw DomainError("task " + std::to_string(t.id) +
                      " is not small in either dimension for the mixed fill");
  }
  if (short_enough && narrow_enough) return;
  throw DomainError("task " + std::to_string(t.id) + " exceeds the fill size limits");
}

}  // namespace

FitResult first_fit_on_top(const Instance& instance, const StructuredSolution& structured,
                           const std::vector<Task>& remaining, const FitParams& params) {
  const Len T = instance.slots;
  const Len C = instance.capacity;
  validate_params(params);
  if (structured.tags.size() != structured.solution.bins.size()) {
    throw DomainError("structured input has " + std::to_string(structured.tags.size()) +
                      " tags for " + std::to_string(structured.solution.bins.size()) +
                      " bins");
  }
  if (auto bad = find_tag_violation(instance, structured)) {
    throw DomainError("structured input bin " + std::to_string(*bad) +
                      " does not satisfy its tag");
  }
  for (const Task& t : remaining) validate_admission(t, instance, params);

  FitResult result;
  result.solution = structured.solution;
  result.audit.threshold =
      params.enforce_condition
          ? (params.mixed ? Rat(1) / params.k
                          : (Rat(1) - params.delta_h) * (Rat(1) - params.delta_w))
          : Rat(0);
  result.audit.structured_bin_count = structured.solution.bins.size();

  // Bins eligible for scanning, in solution order; area-full bins are final.
  std::vector<std::size_t> scannable;
  std::vector<LoadProfile> profiles;
  for (std::size_t i = 0; i < structured.solution.bins.size(); ++i) {
    if (structured.tags[i].kind != BinTagKind::SortedProfile) continue;
    scannable.push_back(i);
    profiles.push_back(load_profile(instance, structured.solution.bins[i]));
  }

  std::list<Task> rem(remaining.begin(), remaining.end());
  std::vector<long long> scanned_fills;

  auto audit_opening = [&](std::size_t opened_index) {
    // Every still-unplaced task was rejected at every slot it could start at
    // in every fully scanned bin, so each such bin holds at least
    // (T - w + 1)(C - h + 1) of load. Check against the strongest one.
    __int128 bound = 0;
    for (const Task& t : rem) {
      __int128 b = static_cast<__int128>(T - t.width + 1) * (C - t.height + 1);
      if (b > bound) bound = b;
    }
    for (long long fill : scanned_fills) {
      if (static_cast<__int128>(fill) < bound) {
        throw std::logic_error("first-fit audit: a fully scanned bin holds " +
                               std::to_string(fill) +
                               " load, below the rejection bound");
      }
      if (params.enforce_condition &&
          !gt_frac(fill, result.audit.threshold,
                   static_cast<long long>(T) * C)) {
        throw std::logic_error("first-fit audit: a fully scanned bin holds " +
                               std::to_string(fill) + " load, not more than " +
                               result.audit.threshold.str() + " of the bin");
      }
    }
    result.audit.openings.push_back(BinOpeningRecord{opened_index, scanned_fills});
  };

  std::size_t next_scan = 0;
  while (!rem.empty()) {
    if (next_scan == scannable.size()) {
      result.solution.bins.emplace_back();
      std::size_t opened = result.solution.bins.size() - 1;
      audit_opening(opened);
      ++result.audit.opened_bin_count;
      scannable.push_back(opened);
      profiles.emplace_back(T);
    }

    LoadProfile& profile = profiles[next_scan];
    Bin& bin = result.solution.bins[scannable[next_scan]];
    // Within the scanned bin the profile from the current slot rightwards is
    // non-increasing, so a task fits at `t` iff its height fits on load_at(t).
    Len t = 1;
    while (t != 0 && !rem.empty()) {
      long long load = profile.load_at(t);
      for (auto it = rem.begin(); it != rem.end();) {
        if (t + it->width - 1 <= T && load + it->height <= C) {
          bin.placements.push_back({*it, t});
          profile.add(t, t + it->width - 1, it->height);
          load += it->height;
          it = rem.erase(it);
        } else {
          ++it;
        }
      }
      t = profile.next_change_after(t);
    }
    scanned_fills.push_back(profile.total_load());
    ++next_scan;
  }

  for (const Bin& b : result.solution.bins) {
    result.audit.final_fills.push_back(load_profile(instance, b).total_load());
  }
  return result;
}

}  // namespace dbp
