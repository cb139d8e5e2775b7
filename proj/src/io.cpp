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

#include "dbp/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace dbp {
namespace {

struct Line {
  int number = 0;
  std::vector<std::string_view> tokens;
};

// Splits into whitespace-separated tokens, dropping comments ('#' to end of
// line), trailing '\r', and lines with no tokens left.
std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::size_t end = eol == std::string::npos ? text.size() : eol;
    ++number;
    std::string_view raw(text.data() + pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (std::size_t hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line;
    line.number = number;
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
      if (i > start) line.tokens.push_back(raw.substr(start, i - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == std::string::npos) break;
    pos = eol + 1;
  }
  return lines;
}

long long parse_int(std::string_view token, const char* what, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(std::string(what) + " '" + std::string(token) + "' is not an integer",
                     line);
  }
  return value;
}

long long parse_positive(std::string_view token, const char* what, int line) {
  long long value = parse_int(token, what, line);
  if (value < 1) {
    throw ParseError(std::string(what) + " must be positive, got " + std::string(token),
                     line);
  }
  return value;
}

void expect_token_count(const Line& line, std::size_t count, const char* shape) {
  if (line.tokens.size() != count) {
    throw ParseError("expected '" + std::string(shape) + "', got " +
                         std::to_string(line.tokens.size()) + " fields",
                     line.number);
  }
}

}  // namespace

Instance parse_instance(const std::string& text) {
  std::vector<Line> lines = significant_lines(text);
  if (lines.empty()) throw ParseError("missing header 'dbp 1'", 1);
  const Line& header = lines[0];
  if (header.tokens.size() != 2 || header.tokens[0] != "dbp" || header.tokens[1] != "1") {
    throw ParseError("expected header 'dbp 1'", header.number);
  }
  if (lines.size() < 2) throw ParseError("missing dimensions line 'T C'", header.number);

  Instance instance;
  expect_token_count(lines[1], 2, "T C");
  instance.slots = parse_positive(lines[1].tokens[0], "slot count", lines[1].number);
  instance.capacity = parse_positive(lines[1].tokens[1], "capacity", lines[1].number);

  std::unordered_set<long long> seen;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const Line& line = lines[i];
    expect_token_count(line, 3, "id w h");
    Task task;
    task.id = parse_positive(line.tokens[0], "task id", line.number);
    task.width = parse_positive(line.tokens[1], "width", line.number);
    task.height = parse_positive(line.tokens[2], "height", line.number);
    if (!seen.insert(task.id).second) {
      throw ParseError("duplicate task id " + std::to_string(task.id), line.number);
    }
    instance.tasks.push_back(task);
  }
  validate_instance(instance);
  return instance;
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  out << "dbp 1\n" << instance.slots << ' ' << instance.capacity << '\n';
  for (const Task& task : instance.tasks) {
    out << task.id << ' ' << task.width << ' ' << task.height << '\n';
  }
  return out.str();
}

Solution parse_solution(const std::string& text, const Instance& instance) {
  std::vector<Line> lines = significant_lines(text);
  if (lines.empty()) throw ParseError("missing header 'dbp-sol 1'", 1);
  const Line& header = lines[0];
  if (header.tokens.size() != 2 || header.tokens[0] != "dbp-sol" ||
      header.tokens[1] != "1") {
    throw ParseError("expected header 'dbp-sol 1'", header.number);
  }

  std::unordered_map<long long, Task> by_id;
  for (const Task& task : instance.tasks) by_id.emplace(task.id, task);

  Solution solution;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    expect_token_count(line, 3, "bin_index task_id start");
    long long bin_index = parse_int(line.tokens[0], "bin index", line.number);
    long long task_id = parse_positive(line.tokens[1], "task id", line.number);
    long long start = parse_positive(line.tokens[2], "start", line.number);
    // Contiguous bins need one placement each, so an index at or past the
    // placement-line count can never be backed by a nonempty bin.
    if (bin_index < 0 || bin_index >= static_cast<long long>(lines.size()) - 1) {
      throw ParseError("bin index " + std::to_string(bin_index) +
                           " cannot belong to a contiguous, nonempty set of bins",
                       line.number);
    }
    auto it = by_id.find(task_id);
    if (it == by_id.end()) {
      throw ParseError("task id " + std::to_string(task_id) + " is not in the instance",
                       line.number);
    }
    if (bin_index >= static_cast<long long>(solution.bins.size())) {
      solution.bins.resize(static_cast<std::size_t>(bin_index) + 1);
    }
    solution.bins[static_cast<std::size_t>(bin_index)].placements.push_back(
        Placement{it->second, start});
  }
  for (std::size_t i = 0; i < solution.bins.size(); ++i) {
    if (solution.bins[i].placements.empty()) {
      throw ParseError("bin " + std::to_string(i) + " is referenced by no placement", 0);
    }
  }
  return solution;
}

std::string serialize_solution(const Solution& solution) {
  std::ostringstream out;
  out << "dbp-sol 1\n";
  for (std::size_t i = 0; i < solution.bins.size(); ++i) {
    for (const Placement& placement : solution.bins[i].placements) {
      out << i << ' ' << placement.task.id << ' ' << placement.start << '\n';
    }
  }
  return out.str();
}

}  // namespace dbp
