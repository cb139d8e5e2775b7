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

#include "dbp/solver_short.hpp"

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "dbp/errors.hpp"
#include "dbp/first_fit.hpp"
#include "dbp/rational.hpp"
#include "dbp/strip.hpp"
#include "dbp/verify.hpp"

namespace dbp {

ShortSolveResult solve_short(const Instance& instance) {
  validate_instance(instance);
  for (const Task& t : instance.tasks) {
    if (9 * t.height > instance.capacity) {
      throw DomainError("task " + std::to_string(t.id) +
                        " is taller than a ninth of the capacity");
    }
  }

  ShortSolveResult out;
  if (instance.tasks.empty()) {
    out.report.guarantee_certificate = true;
    return out;
  }

  std::vector<Task> wide;
  std::vector<Task> rest;
  for (const Task& t : instance.tasks) {
    (3 * t.width > instance.slots ? wide : rest).push_back(t);
  }

  FitParams params;
  params.k = Rat(2);
  params.delta_h = Rat(1, 9);
  params.delta_w = Rat(1, 3);

  struct Best {
    std::size_t bins;
    std::size_t guess;
    std::size_t structured;
    Solution solution;
  };
  std::optional<Best> best;

  const std::size_t n = instance.tasks.size();
  const long long lb = area_lower_bound(instance);
  for (std::size_t g = static_cast<std::size_t>(lb); g <= n; ++g) {
    out.report.guesses_tried.push_back(g);
    if (instance.capacity > std::numeric_limits<long long>::max() / static_cast<long long>(g)) {
      throw std::overflow_error("strip budget overflows for guess " + std::to_string(g));
    }
    const long long budget = instance.capacity * static_cast<long long>(g);
    std::optional<StripLayout> layout = two_pile_strip(wide, budget, instance.slots);
    if (!layout) continue;
    StructuredSolution structured = cut_strip(*layout, instance.capacity);
    FitResult fit = first_fit_on_top(instance, structured, rest, params);
    if (!verify_solution(instance, fit.solution).ok()) {
      throw std::logic_error("guess " + std::to_string(g) + " produced an invalid solution");
    }
    const std::size_t bins = fit.solution.bins.size();
    if (!best || bins < best->bins) {
      best = Best{bins, g, structured.solution.bins.size(), std::move(fit.solution)};
    }
  }

  if (!best) {
    throw std::logic_error("no guess between the area bound and the task count worked");
  }
  out.solution = std::move(best->solution);
  out.report.accepted_guess = best->guess;
  out.report.structured_bins = best->structured;
  out.report.final_bins = best->bins;
  out.report.guarantee_certificate = best->bins <= 2 * best->guess;
  return out;
}

}  // namespace dbp
