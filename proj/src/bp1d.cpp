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

#include "dbp/bp1d.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "dbp/errors.hpp"

namespace dbp {

namespace {

// Scales rationals to integers over the least common denominator.
long long common_denominator(const std::vector<Rat>& values, long long seed) {
  long long l = seed;
  for (const Rat& v : values) {
    long long g = std::gcd(l, v.den());
    __int128 wide = static_cast<__int128>(l / g) * v.den();
    if (wide > INT64_MAX) throw std::overflow_error("size denominators overflow");
    l = static_cast<long long>(wide);
  }
  return l;
}

long long scaled(const Rat& v, long long denom) {
  __int128 wide = static_cast<__int128>(v.num()) * (denom / v.den());
  if (wide > INT64_MAX || wide < INT64_MIN) throw std::overflow_error("scaled size overflows");
  return static_cast<long long>(wide);
}

std::vector<std::size_t> order_desc(const std::vector<long long>& sizes) {
  std::vector<std::size_t> order(sizes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (sizes[a] != sizes[b]) return sizes[a] > sizes[b];
    return a < b;
  });
  return order;
}

Groups ffd_scaled(const std::vector<long long>& sizes, long long capacity) {
  Groups groups;
  std::vector<long long> residual;
  for (std::size_t idx : order_desc(sizes)) {
    if (sizes[idx] > capacity) {
      throw DomainError("size at index " + std::to_string(idx) + " exceeds the capacity");
    }
    bool placed = false;
    for (std::size_t b = 0; b < groups.size(); ++b) {
      if (residual[b] >= sizes[idx]) {
        groups[b].push_back(idx);
        residual[b] -= sizes[idx];
        placed = true;
        break;
      }
    }
    if (!placed) {
      groups.push_back({idx});
      residual.push_back(capacity - sizes[idx]);
    }
  }
  return groups;
}

struct BpSearch {
  const std::vector<long long>& sizes;  // in descending processing order
  long long capacity;
  long long node_budget;
  long long nodes = 0;
  bool aborted = false;

  std::vector<long long> residual;
  std::vector<std::size_t> bin_of;  // per processed item
  std::size_t best;
  std::vector<std::size_t> best_bin_of;
  std::vector<long long> suffix_sum;

  BpSearch(const std::vector<long long>& sizes_in, long long cap, long long budget,
           std::size_t incumbent)
      : sizes(sizes_in), capacity(cap), node_budget(budget), best(incumbent) {
    bin_of.assign(sizes.size(), 0);
    suffix_sum.assign(sizes.size() + 1, 0);
    for (std::size_t i = sizes.size(); i > 0; --i) {
      suffix_sum[i - 1] = suffix_sum[i] + sizes[i - 1];
    }
  }

  void dfs(std::size_t i) {
    if (aborted) return;
    if (++nodes > node_budget) {
      aborted = true;
      return;
    }
    if (i == sizes.size()) {
      if (residual.size() < best) {
        best = residual.size();
        best_bin_of = bin_of;
      }
      return;
    }
    // Even filling every open bin to the brim, the leftovers need this many
    // fresh bins.
    long long free_space = 0;
    for (long long r : residual) free_space += r;
    long long overflow = suffix_sum[i] - free_space;
    std::size_t need =
        overflow > 0 ? static_cast<std::size_t>((overflow + capacity - 1) / capacity) : 0;
    if (residual.size() + need >= best) return;

    // Equal items never go to an earlier bin than their twin.
    std::size_t start = 0;
    if (i > 0 && sizes[i] == sizes[i - 1]) start = bin_of[i - 1];

    std::vector<long long> tried;
    for (std::size_t b = start; b < residual.size() && !aborted; ++b) {
      if (residual[b] < sizes[i]) continue;
      if (std::find(tried.begin(), tried.end(), residual[b]) != tried.end()) continue;
      tried.push_back(residual[b]);
      residual[b] -= sizes[i];
      bin_of[i] = b;
      dfs(i + 1);
      residual[b] += sizes[i];
    }
    if (aborted) return;
    if (residual.size() + 1 < best) {
      residual.push_back(capacity - sizes[i]);
      bin_of[i] = residual.size() - 1;
      dfs(i + 1);
      residual.pop_back();
    }
  }
};

long long ceil_rat(const Rat& r) {
  return (r.num() + r.den() - 1) / r.den();  // positive rationals only
}

}  // namespace

Groups ffd(const std::vector<Rat>& sizes, const Rat& capacity) {
  long long denom = common_denominator(sizes, capacity.den());
  std::vector<long long> s;
  s.reserve(sizes.size());
  for (const Rat& v : sizes) {
    if (v < Rat(0)) throw DomainError("negative size");
    s.push_back(scaled(v, denom));
  }
  return ffd_scaled(s, scaled(capacity, denom));
}

ExactBpResult exact_bp(const std::vector<Rat>& sizes, const Rat& capacity,
                       long long node_budget) {
  ExactBpResult result;
  if (sizes.empty()) {
    result.status = SearchStatus::Proven;
    return result;
  }
  long long denom = common_denominator(sizes, capacity.den());
  std::vector<long long> raw;
  raw.reserve(sizes.size());
  long long total = 0;
  for (const Rat& v : sizes) {
    if (v < Rat(0)) throw DomainError("negative size");
    raw.push_back(scaled(v, denom));
    total += raw.back();
  }
  long long cap = scaled(capacity, denom);

  Groups seed = ffd_scaled(raw, cap);
  std::size_t lb = static_cast<std::size_t>((total + cap - 1) / cap);
  if (seed.size() <= std::max<std::size_t>(lb, 1)) {
    result.status = SearchStatus::Proven;
    result.bin_count = seed.size();
    result.groups = seed;
    return result;
  }

  std::vector<std::size_t> order = order_desc(raw);
  std::vector<long long> sorted;
  sorted.reserve(raw.size());
  for (std::size_t idx : order) sorted.push_back(raw[idx]);

  BpSearch search(sorted, cap, node_budget, seed.size());
  search.dfs(0);

  result.nodes = search.nodes;
  result.status = search.aborted ? SearchStatus::Unknown : SearchStatus::Proven;
  if (search.best_bin_of.empty()) {
    result.bin_count = seed.size();
    result.groups = seed;
  } else {
    result.bin_count = search.best;
    result.groups.assign(search.best, {});
    for (std::size_t i = 0; i < order.size(); ++i) {
      result.groups[search.best_bin_of[i]].push_back(order[i]);
    }
  }
  return result;
}

AptasResult aptas_bp(const std::vector<Rat>& sizes, const Rat& capacity, const Rat& epsilon) {
  if (epsilon <= Rat(0) || epsilon > Rat(1, 2)) {
    throw DomainError("epsilon must lie in (0, 1/2]");
  }
  if (capacity <= Rat(0)) throw DomainError("capacity must be positive");
  for (const Rat& s : sizes) {
    if (s < Rat(0)) throw DomainError("negative size");
    if (s > capacity) throw DomainError("size exceeds the capacity");
  }
  const Rat half_eps = epsilon / Rat(2);

  std::vector<std::size_t> large, small;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    (sizes[i] > half_eps * capacity ? large : small).push_back(i);
  }
  std::sort(large.begin(), large.end(), [&](std::size_t a, std::size_t b) {
    if (sizes[a] != sizes[b]) return sizes[a] > sizes[b];
    return a < b;
  });

  AptasResult result;
  result.method = "rounded-exact";
  if (!large.empty()) {
    std::size_t q = static_cast<std::size_t>(
        ceil_rat(half_eps * half_eps * Rat(static_cast<long long>(large.size()))));
    if (q == 0) q = 1;
    // The q largest get a bin each; later chunks are rounded up to their
    // chunk's largest value, which a chunk of the previous sizes dominates.
    for (std::size_t i = 0; i < q && i < large.size(); ++i) {
      result.groups.push_back({large[i]});
    }
    std::vector<std::size_t> rest(large.begin() + std::min(q, large.size()), large.end());
    if (!rest.empty()) {
      std::vector<Rat> rounded;
      rounded.reserve(rest.size());
      for (std::size_t j = 0; j < rest.size(); ++j) {
        rounded.push_back(sizes[rest[j - j % q]]);  // chunk leader's size
      }
      ExactBpResult packed = exact_bp(rounded, capacity);
      if (packed.status == SearchStatus::Unknown) {
        packed.groups = ffd(rounded, capacity);
        result.method = "rounded-ffd";
      }
      for (const auto& group : packed.groups) {
        std::vector<std::size_t> bin;
        for (std::size_t j : group) bin.push_back(rest[j]);
        result.groups.push_back(std::move(bin));
      }
    }
  }

  // Small sizes go first-fit over everything, opening bins as needed.
  std::vector<Rat> room(result.groups.size(), capacity);
  for (std::size_t b = 0; b < result.groups.size(); ++b) {
    for (std::size_t i : result.groups[b]) room[b] = room[b] - sizes[i];
  }
  for (std::size_t i : small) {
    bool placed = false;
    for (std::size_t b = 0; b < result.groups.size(); ++b) {
      if (room[b] >= sizes[i]) {
        result.groups[b].push_back(i);
        room[b] = room[b] - sizes[i];
        placed = true;
        break;
      }
    }
    if (!placed) {
      result.groups.push_back({i});
      room.push_back(capacity - sizes[i]);
    }
  }

  // Confirm the ratio against a cheap lower bound, escalating to the exact
  // solver when the bound alone cannot settle it.
  Rat total(0);
  long long over_half = 0;
  for (const Rat& s : sizes) {
    total = total + s;
    if (s * Rat(2) > capacity) ++over_half;
  }
  long long lb = std::max(ceil_rat(total / capacity), over_half);
  Rat count(static_cast<long long>(result.groups.size()));
  Rat allowed = (Rat(1) + epsilon) * Rat(lb) + Rat(1);
  if (count <= allowed) {
    result.certified = true;
    return result;
  }
  ExactBpResult exact = exact_bp(sizes, capacity);
  if (exact.status == SearchStatus::Proven) {
    Rat tight = (Rat(1) + epsilon) * Rat(static_cast<long long>(exact.bin_count)) + Rat(1);
    if (count > tight) {
      throw std::logic_error("near-optimal packer exceeded its ratio: " +
                             std::to_string(result.groups.size()) + " bins vs optimum " +
                             std::to_string(exact.bin_count));
    }
    result.certified = true;
  }
  return result;
}

MkpResult mkp_pack_all(const std::vector<Rat>& sizes, const std::vector<Rat>& capacities,
                       const Rat& slack, long long node_budget) {
  if (slack < Rat(0)) throw DomainError("slack must be non-negative");
  MkpResult result;

  Rat total(0), room(0);
  for (const Rat& s : sizes) {
    if (s < Rat(0)) throw DomainError("negative size");
    total = total + s;
  }
  for (const Rat& c : capacities) room = room + c;
  if (total > room - slack) {
    result.status = SearchStatus::Proven;
    result.feasible = false;
    return result;
  }
  if (sizes.empty()) {
    result.status = SearchStatus::Proven;
    result.feasible = true;
    return result;
  }
  if (capacities.empty()) {
    result.status = SearchStatus::Proven;
    result.feasible = false;
    return result;
  }

  std::vector<Rat> all = sizes;
  all.insert(all.end(), capacities.begin(), capacities.end());
  long long denom = common_denominator(all, slack.den());
  std::vector<long long> s;
  for (const Rat& v : sizes) s.push_back(scaled(v, denom));
  std::vector<long long> residual;
  for (const Rat& v : capacities) residual.push_back(scaled(v, denom));

  std::vector<std::size_t> order = order_desc(s);
  std::vector<long long> suffix(s.size() + 1, 0);
  for (std::size_t i = s.size(); i > 0; --i) suffix[i - 1] = suffix[i] + s[order[i - 1]];

  std::vector<std::size_t> bin_of(s.size(), 0);
  long long nodes = 0;
  bool aborted = false;
  bool found = false;

  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (aborted || found) return;
    if (++nodes > node_budget) {
      aborted = true;
      return;
    }
    if (i == s.size()) {
      found = true;
      return;
    }
    long long free_space = 0;
    for (long long r : residual) free_space += r;
    if (suffix[i] > free_space) return;

    std::size_t start = 0;
    if (i > 0 && s[order[i]] == s[order[i - 1]]) start = bin_of[i - 1];
    std::vector<long long> tried;
    for (std::size_t b = start; b < residual.size(); ++b) {
      if (residual[b] < s[order[i]]) continue;
      if (std::find(tried.begin(), tried.end(), residual[b]) != tried.end()) continue;
      tried.push_back(residual[b]);
      residual[b] -= s[order[i]];
      bin_of[i] = b;
      self(self, i + 1);
      if (found) return;  // keep bin_of intact for readout
      residual[b] += s[order[i]];
      if (aborted) return;
    }
  };
  dfs(dfs, 0);

  result.nodes = nodes;
  if (found) {
    result.status = SearchStatus::Proven;
    result.feasible = true;
    result.assignment.assign(s.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) result.assignment[order[i]] = bin_of[i];
  } else {
    result.status = aborted ? SearchStatus::Unknown : SearchStatus::Proven;
    result.feasible = false;
  }
  return result;
}

}  // namespace dbp
