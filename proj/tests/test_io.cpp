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

#include <cstddef>
#include <string>
#include <vector>

#include "dbp/errors.hpp"
#include "dbp/generators.hpp"
#include "dbp/io.hpp"
#include "dbp/model.hpp"
#include "dbp/svg_render.hpp"
#include "dbp/verify.hpp"
#include "doctest.h"

namespace dbp {
namespace {

int line_of(const char* text, void (*parse)(const std::string&)) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

void parse_instance_only(const std::string& text) { parse_instance(text); }

std::size_t count_of(const std::string& haystack, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

TEST_CASE("instances survive a serialize and parse round trip") {
  Instance gap = gen_gap().instance;
  Instance back = parse_instance(serialize_instance(gap));
  CHECK(back.slots == gap.slots);
  CHECK(back.capacity == gap.capacity);
  REQUIRE(back.tasks.size() == gap.tasks.size());
  for (std::size_t i = 0; i < gap.tasks.size(); ++i) {
    CHECK(back.tasks[i].id == gap.tasks[i].id);
    CHECK(back.tasks[i].width == gap.tasks[i].width);
    CHECK(back.tasks[i].height == gap.tasks[i].height);
  }
  CHECK(serialize_instance(back) == serialize_instance(gap));

  Instance wide = gen_3part_short({{4, 5, 6, 4, 5, 6, 4, 5, 6}, 3}).instance;
  CHECK(serialize_instance(parse_instance(serialize_instance(wide))) ==
        serialize_instance(wide));

  Instance random = gen_random(RandomFamily::Mixed, 20, 37, 15, 99);
  CHECK(serialize_instance(parse_instance(serialize_instance(random))) ==
        serialize_instance(random));
}

TEST_CASE("instance parsing skips comments, blanks, and carriage returns") {
  const char* text =
      "# corpus fixture\r\n"
      "\r\n"
      "dbp 1   # header\n"
      "  8\t3\n"
      "\n"
      "1 2 2\r\n"
      "2 8 1 # full width\n"
      "   # trailing comment line\n";
  Instance ins = parse_instance(text);
  CHECK(ins.slots == 8);
  CHECK(ins.capacity == 3);
  REQUIRE(ins.tasks.size() == 2);
  CHECK(ins.tasks[1].width == 8);
}

TEST_CASE("instance parse errors carry the offending line") {
  CHECK(line_of("", parse_instance_only) == 1);
  CHECK(line_of("demand 1\n4 4\n", parse_instance_only) == 1);
  CHECK(line_of("# intro\ndbp 2\n4 4\n", parse_instance_only) == 2);
  CHECK(line_of("dbp 1\n", parse_instance_only) == 1);
  CHECK(line_of("dbp 1\n4\n", parse_instance_only) == 2);
  CHECK(line_of("dbp 1\n4 4\n1 2\n", parse_instance_only) == 3);
  CHECK(line_of("dbp 1\n4 x\n", parse_instance_only) == 2);
  CHECK(line_of("dbp 1\n4 4\n1 0 2\n", parse_instance_only) == 3);
  CHECK(line_of("dbp 1\n4 4\n0 2 2\n", parse_instance_only) == 3);
  CHECK(line_of("dbp 1\n4 4\n\n1 2 2\n# gap\n1 1 1\n", parse_instance_only) == 6);
  CHECK(line_of("dbp 1\n0 4\n", parse_instance_only) == 2);

  // Structurally fine but semantically broken files fail domain validation,
  // not parsing.
  CHECK_THROWS_AS(parse_instance("dbp 1\n4 4\n1 5 2\n"), DomainError);
}

TEST_CASE("solutions survive a serialize and parse round trip") {
  GapFixture gap = gen_gap();
  std::string text = serialize_solution(gap.witness);
  Solution back = parse_solution(text, gap.instance);
  REQUIRE(back.bins.size() == 1);
  REQUIRE(back.bins[0].placements.size() == gap.witness.bins[0].placements.size());
  for (std::size_t i = 0; i < back.bins[0].placements.size(); ++i) {
    CHECK(back.bins[0].placements[i].task.id == gap.witness.bins[0].placements[i].task.id);
    CHECK(back.bins[0].placements[i].start == gap.witness.bins[0].placements[i].start);
  }
  CHECK(serialize_solution(back) == text);
  CHECK(verify_solution(gap.instance, back).ok());
}

TEST_CASE("solution parsing rejects structural breakage") {
  Instance ins;
  ins.slots = 6;
  ins.capacity = 4;
  ins.tasks = {{1, 2, 2}, {2, 3, 1}};

  CHECK_THROWS_AS(parse_solution("", ins), ParseError);
  CHECK_THROWS_AS(parse_solution("dbp 1\n0 1 1\n", ins), ParseError);
  CHECK_THROWS_AS(parse_solution("dbp-sol 1\n0 3 1\n", ins), ParseError);   // unknown id
  CHECK_THROWS_AS(parse_solution("dbp-sol 1\n0 1 0\n", ins), ParseError);   // start < 1
  CHECK_THROWS_AS(parse_solution("dbp-sol 1\n-1 1 1\n", ins), ParseError);  // bin < 0
  // Bin 1 is never used: the bins are not contiguous.
  CHECK_THROWS_AS(parse_solution("dbp-sol 1\n0 1 1\n2 2 1\n", ins), ParseError);
  // An absurd index cannot allocate storage for empty bins on the way there.
  CHECK_THROWS_AS(parse_solution("dbp-sol 1\n900000000000 1 1\n", ins), ParseError);

  // Duplicate placements parse; completeness is the verifier's call.
  Solution twice = parse_solution("dbp-sol 1\n0 1 1\n0 1 3\n", ins);
  VerificationReport report = verify_solution(ins, twice);
  CHECK_FALSE(report.complete);
  CHECK(report.duplicate_ids == std::vector<long long>{1});

  Solution partial = parse_solution("dbp-sol 1\n  0 2 4 # with comment\n", ins);
  REQUIRE(partial.bins.size() == 1);
  CHECK(partial.bins[0].placements[0].task.width == 3);
  CHECK_FALSE(verify_solution(ins, partial).complete);
}

TEST_CASE("the renderer draws one panel per bin with profile and capacity marks") {
  GapFixture gap = gen_gap();
  std::string svg = render_svg(gap.instance, gap.witness);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
  CHECK(count_of(svg, "bin 0 (14 tasks)") == 1);
  CHECK(count_of(svg, "bin 1") == 0);
  // Background, fourteen tasks, and the panel frame.
  CHECK(count_of(svg, "<rect") == 16);
  CHECK(count_of(svg, "<polyline") == 1);
  CHECK(count_of(svg, "stroke-dasharray") == 1);
  // 21 slots is within the detail limit: grid lines and id labels show up.
  CHECK(count_of(svg, "#dddddd") == 20);
  CHECK(count_of(svg, "<title>task 1: 10x10 at 1</title>") == 1);
  CHECK(render_svg(gap.instance, gap.witness) == svg);

  Solution split;
  split.bins.resize(2);
  for (std::size_t i = 0; i < gap.witness.bins[0].placements.size(); ++i) {
    split.bins[i % 2].placements.push_back(gap.witness.bins[0].placements[i]);
  }
  std::string two = render_svg(gap.instance, split);
  CHECK(count_of(two, "bin 0 (7 tasks)") == 1);
  CHECK(count_of(two, "bin 1 (7 tasks)") == 1);
  CHECK(count_of(two, "<polyline") == 2);
}

TEST_CASE("the renderer copes with empty, wide, and overloaded inputs") {
  std::string empty = render_svg(gen_gap().instance, Solution{});
  CHECK(empty.find("<svg") != std::string::npos);
  CHECK(empty.find("empty solution") != std::string::npos);
  CHECK(empty.find("<rect") == std::string::npos);

  // Past the detail limit the grid and id labels drop out but the panel,
  // profile, and capacity marks stay.
  Instance wide;
  wide.slots = 400;
  wide.capacity = 5;
  wide.tasks = {{1, 250, 2}, {2, 300, 3}};
  Solution wide_sol;
  wide_sol.bins.resize(1);
  wide_sol.bins[0].placements = {{wide.tasks[0], 1}, {wide.tasks[1], 101}};
  std::string svg = render_svg(wide, wide_sol);
  CHECK(count_of(svg, "#dddddd") == 0);
  CHECK(count_of(svg, "<text") == 1);  // only the caption
  CHECK(count_of(svg, "<rect") == 4);
  CHECK(count_of(svg, "<title>task 2: 300x3 at 101</title>") == 1);

  // A stack that overflows the capacity still renders; the panel grows to
  // fit and the capacity line sits inside it.
  Instance tiny;
  tiny.slots = 3;
  tiny.capacity = 2;
  tiny.tasks = {{1, 3, 2}, {2, 3, 2}, {3, 3, 2}};
  Solution pile;
  pile.bins.resize(1);
  pile.bins[0].placements = {{tiny.tasks[0], 1}, {tiny.tasks[1], 1}, {tiny.tasks[2], 1}};
  std::string overloaded = render_svg(tiny, pile);
  CHECK(count_of(overloaded, "<rect") == 5);
  CHECK(count_of(overloaded, "stroke-dasharray") == 1);
}

}  // namespace
}  // namespace dbp
