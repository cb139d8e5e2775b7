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

// Command-line surface. Exit codes: 0 success, 1 parse or I/O error, 2 domain
// error, 3 verification failure, 4 oracle result unknown.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dbp/errors.hpp"
#include "dbp/generators.hpp"
#include "dbp/io.hpp"
#include "dbp/model.hpp"
#include "dbp/oracle.hpp"
#include "dbp/search.hpp"
#include "dbp/solver_general.hpp"
#include "dbp/solver_short.hpp"
#include "dbp/solver_squares.hpp"
#include "dbp/svg_render.hpp"
#include "dbp/verify.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dbp::ParseError("cannot open " + path, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw dbp::ParseError("cannot open " + path + " for writing", 0);
  out << content;
  out.flush();
  if (!out) throw dbp::ParseError("write to " + path + " failed", 0);
}

// Empty path means stdout.
void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
  } else {
    write_file(path, content);
  }
}

bool all_short(const dbp::Instance& instance) {
  for (const dbp::Task& task : instance.tasks) {
    if (static_cast<__int128>(9) * task.height > instance.capacity) return false;
  }
  return true;
}

bool all_square(const dbp::Instance& instance) {
  for (const dbp::Task& task : instance.tasks) {
    if (task.width != task.height) return false;
  }
  return true;
}

std::string pick_algo(const dbp::Instance& instance) {
  if (all_short(instance)) return "short";
  if (all_square(instance)) {
    return instance.slots == instance.capacity ? "squares-eq" : "squares";
  }
  return "general";
}

const char* square_case_name(dbp::SquareCase square_case) {
  switch (square_case) {
    case dbp::SquareCase::WideBin: return "wide-bin";
    case dbp::SquareCase::NearSquareWide: return "near-square-wide";
    case dbp::SquareCase::NearSquareTall: return "near-square-tall";
    case dbp::SquareCase::TallBin: return "tall-bin";
  }
  return "?";
}

json squares_report_json(const dbp::SquaresSolveReport& report) {
  json r;
  r["square_case"] = square_case_name(report.square_case);
  r["guesses_tried"] = report.guesses_tried;
  r["accepted_guess"] = report.accepted_guess;
  r["structured_bins"] = report.structured_bins;
  r["final_bins"] = report.final_bins;
  r["guarantee_certificate"] = report.guarantee_certificate;
  r["interval_packing_method"] = report.interval_packing_method;
  return r;
}

dbp::Solution run_solver(const dbp::Instance& instance, const std::string& algo,
                         json* report) {
  if (algo == "short") {
    dbp::ShortSolveResult res = dbp::solve_short(instance);
    if (report) {
      (*report)["guesses_tried"] = res.report.guesses_tried;
      (*report)["accepted_guess"] = res.report.accepted_guess;
      (*report)["structured_bins"] = res.report.structured_bins;
      (*report)["final_bins"] = res.report.final_bins;
      (*report)["guarantee_certificate"] = res.report.guarantee_certificate;
    }
    return std::move(res.solution);
  }
  if (algo == "squares-eq") {
    dbp::SquaresSolveResult res = dbp::solve_squares_eq(instance);
    if (report) *report = squares_report_json(res.report);
    return std::move(res.solution);
  }
  if (algo == "squares") {
    dbp::SquaresSolveResult res = dbp::solve_squares_general(instance);
    if (report) *report = squares_report_json(res.report);
    return std::move(res.solution);
  }
  dbp::GeneralSolveResult res = dbp::solve_general(instance);
  if (report) {
    (*report)["guesses_tried"] = res.report.guesses_tried;
    (*report)["accepted_guess"] = res.report.accepted_guess;
    (*report)["regime"] = res.report.regime == dbp::GuessRegime::Le70 ? "le70" : "gt70";
    (*report)["subcase"] = res.report.subcase;
    if (res.report.full_bins) {
      (*report)["full_bins"] = *res.report.full_bins;
    } else {
      (*report)["full_bins"] = nullptr;
    }
    if (res.report.half_bins) {
      (*report)["half_bins"] = *res.report.half_bins;
    } else {
      (*report)["half_bins"] = nullptr;
    }
    (*report)["structured_bins"] = res.report.structured_bins;
    (*report)["final_bins"] = res.report.final_bins;
    (*report)["guarantee_certificate"] = res.report.guarantee_certificate;
    (*report)["used_fallback"] = res.report.used_fallback;
  }
  return std::move(res.solution);
}

int cmd_solve(const std::string& in_path, std::string algo, const std::string& out_path,
              const std::string& report_path) {
  dbp::Instance instance = dbp::parse_instance(read_file(in_path));
  if (algo == "auto") algo = pick_algo(instance);

  json report;
  dbp::Solution solution = run_solver(instance, algo, &report);
  dbp::VerificationReport verification = dbp::verify_solution(instance, solution);

  report["algo"] = algo;
  report["bins"] = solution.bins.size();
  report["area_lower_bound"] = dbp::area_lower_bound(instance);
  report["verified"] = verification.ok();
  if (!report_path.empty()) write_file(report_path, report.dump(2) + "\n");
  emit(out_path, dbp::serialize_solution(solution));

  std::cerr << "algo " << algo << ": " << solution.bins.size() << " bins, verified "
            << (verification.ok() ? "yes" : "NO") << "\n";
  return verification.ok() ? 0 : 3;
}

int cmd_verify(const std::string& in_path, const std::string& sol_path) {
  dbp::Instance instance = dbp::parse_instance(read_file(in_path));
  dbp::Solution solution = dbp::parse_solution(read_file(sol_path), instance);
  dbp::VerificationReport report = dbp::verify_solution(instance, solution);

  std::cout << "complete: " << (report.complete ? "yes" : "no") << "\n"
            << "feasible: " << (report.feasible ? "yes" : "no") << "\n"
            << "bins: " << report.bin_count << "\n";
  if (report.first_violation) {
    std::cout << "violation: bin " << report.first_violation->bin_index << " slot "
              << report.first_violation->slot << " load " << report.first_violation->load
              << " exceeds capacity " << instance.capacity << "\n";
  }
  auto list_ids = [](const char* label, const std::vector<long long>& ids) {
    if (ids.empty()) return;
    std::cout << label << ":";
    for (long long id : ids) std::cout << ' ' << id;
    std::cout << "\n";
  };
  list_ids("missing", report.missing_ids);
  list_ids("duplicate", report.duplicate_ids);
  list_ids("unknown", report.unknown_ids);
  return report.ok() ? 0 : 3;
}

// Runs `search` with the full node budget, or, when a timeout is set, with
// doubling budgets so a fast proof returns early and a slow one stops close
// to the allotted time.
template <typename SearchFn>
auto deepened(SearchFn search, long long max_nodes, double timeout_seconds) {
  auto started = std::chrono::steady_clock::now();
  long long budget =
      timeout_seconds > 0 ? std::min<long long>(1'000'000, max_nodes) : max_nodes;
  for (;;) {
    auto outcome = search(dbp::SearchBudget{budget});
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
    if (outcome.status == dbp::SearchStatus::Proven || budget >= max_nodes ||
        (timeout_seconds > 0 && elapsed.count() >= timeout_seconds)) {
      return outcome;
    }
    budget = std::min(budget * 2, max_nodes);
  }
}

int cmd_oracle(const std::string& in_path, const std::string& mode, long long max_nodes,
               double timeout_seconds) {
  dbp::Instance instance = dbp::parse_instance(read_file(in_path));

  if (mode == "opt") {
    dbp::OptOutcome outcome = deepened(
        [&](const dbp::SearchBudget& budget) {
          return dbp::exact_demand_bp(instance, budget);
        },
        max_nodes, timeout_seconds);
    bool proven = outcome.status == dbp::SearchStatus::Proven;
    std::cout << (proven ? "Proven" : "Unknown") << "\n";
    if (proven) {
      std::cout << "optimum: " << outcome.bin_count << "\n";
    } else if (outcome.bin_count > 0) {
      std::cout << "best: " << outcome.bin_count << "\n";
    } else {
      std::cout << "best: none\n";
    }
    std::cout << "nodes: " << outcome.nodes << "\n";
    return proven ? 0 : 4;
  }

  auto report_feasibility = [](bool proven, bool feasible, long long nodes) {
    std::cout << (proven ? "Proven" : "Unknown") << "\n";
    if (proven) std::cout << "feasible: " << (feasible ? "yes" : "no") << "\n";
    std::cout << "nodes: " << nodes << "\n";
    return proven ? 0 : 4;
  };
  if (mode == "one-bin") {
    dbp::FeasibilityOutcome outcome = deepened(
        [&](const dbp::SearchBudget& budget) {
          return dbp::single_bin_feasible(instance, budget);
        },
        max_nodes, timeout_seconds);
    return report_feasibility(outcome.status == dbp::SearchStatus::Proven,
                              outcome.feasible, outcome.nodes);
  }
  dbp::GeometricOutcome outcome = deepened(
      [&](const dbp::SearchBudget& budget) {
        return dbp::geometric_feasible(instance.tasks, instance.slots, instance.capacity,
                                       budget);
      },
      max_nodes, timeout_seconds);
  return report_feasibility(outcome.status == dbp::SearchStatus::Proven, outcome.feasible,
                            outcome.nodes);
}

dbp::ThreePartitionInput partition_input(const std::vector<long long>& numbers) {
  dbp::ThreePartitionInput input;
  input.numbers = numbers;
  input.z = static_cast<long long>(numbers.size()) / 3;
  return input;
}

int cmd_gen_gap(const std::string& out_path, const std::string& witness_path) {
  dbp::GapFixture fixture = dbp::gen_gap();
  emit(out_path, dbp::serialize_instance(fixture.instance));
  if (!witness_path.empty()) {
    write_file(witness_path, dbp::serialize_solution(fixture.witness));
  }
  return 0;
}

int cmd_gen_3part_short(const std::vector<long long>& numbers,
                        const std::string& out_path) {
  dbp::ShortReduction reduction = dbp::gen_3part_short(partition_input(numbers));
  std::cerr << "target " << reduction.target << ", timeline " << reduction.instance.slots
            << ", capacity " << reduction.instance.capacity << "\n";
  if (!reduction.out_of_range.empty()) {
    std::cerr << "warning: " << reduction.out_of_range.size()
              << " numbers outside (target/4, target/2); the instance no longer "
                 "encodes the partition decision\n";
  }
  emit(out_path, dbp::serialize_instance(reduction.instance));
  return 0;
}

int cmd_gen_3part_squares(const std::vector<long long>& numbers,
                          const std::string& out_path) {
  dbp::SquaresReduction reduction = dbp::gen_3part_squares(partition_input(numbers));
  const dbp::SquaresReductionParams& p = reduction.params;
  std::cerr << "n " << p.n << ", x " << p.x << ", scale " << p.scale << ", b " << p.b
            << ", d " << p.d << ", side " << p.side << "\n"
            << "tasks: " << p.structure_count << " structure, " << p.partition_count
            << " partition, " << p.enforcer_count << " enforcer\n";
  for (const std::string& warning : reduction.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
  emit(out_path, dbp::serialize_instance(reduction.instance));
  return 0;
}

int cmd_gen_random(const std::string& family_name, std::size_t n, dbp::Len slots,
                   dbp::Len capacity, std::uint64_t seed, const std::string& out_path) {
  dbp::RandomFamily family = dbp::RandomFamily::Mixed;
  if (family_name == "short") family = dbp::RandomFamily::ShortTasks;
  if (family_name == "squares") family = dbp::RandomFamily::Squares;
  dbp::Instance instance = dbp::gen_random(family, n, slots, capacity, seed);
  emit(out_path, dbp::serialize_instance(instance));
  return 0;
}

int cmd_render(const std::string& in_path, const std::string& sol_path,
               const std::string& svg_path) {
  dbp::Instance instance = dbp::parse_instance(read_file(in_path));
  dbp::Solution solution = dbp::parse_solution(read_file(sol_path), instance);
  emit(svg_path, dbp::render_svg(instance, solution));
  return 0;
}

struct BenchRow {
  std::string instance;
  std::string algo;
  std::string cells;  // the remaining comma-separated columns
};

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::size_t dash = text.find('-');
  try {
    if (dash == std::string::npos) {
      lo = hi = std::stoull(text);
    } else {
      lo = std::stoull(text.substr(0, dash));
      hi = std::stoull(text.substr(dash + 1));
    }
  } catch (const std::exception&) {
    throw dbp::ParseError("--seeds expects A or A-B, got '" + text + "'", 0);
  }
  if (hi < lo) throw dbp::ParseError("--seeds range is reversed: " + text, 0);
  return {lo, hi};
}

int cmd_bench(const std::string& dir, const std::string& seeds,
              const std::vector<std::string>& algos, const std::string& csv_path,
              long long oracle_nodes) {
  std::vector<std::pair<std::string, dbp::Instance>> corpus;

  if (!dir.empty()) {
    if (!std::filesystem::is_directory(dir)) {
      throw dbp::ParseError("not a directory: " + dir, 0);
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      if (entry.path().extension() == ".dbp") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
      corpus.emplace_back(path.filename().string(), dbp::parse_instance(read_file(path)));
    }
  }
  if (!seeds.empty()) {
    auto [lo, hi] = parse_seed_range(seeds);
    for (std::uint64_t s = lo; s <= hi; ++s) {
      std::string tag = "-s" + std::to_string(s);
      corpus.emplace_back("short" + tag,
                          dbp::gen_random(dbp::RandomFamily::ShortTasks, 8, 20, 18, s));
      corpus.emplace_back("squares" + tag,
                          dbp::gen_random(dbp::RandomFamily::Squares, 8, 12, 12, s));
      corpus.emplace_back("mixed" + tag,
                          dbp::gen_random(dbp::RandomFamily::Mixed, 8, 12, 12, s));
      if (s == hi) break;  // hi may be the maximum uint64
    }
  }
  if (corpus.empty()) {
    throw dbp::ParseError("bench needs --dir and/or --seeds to build a corpus", 0);
  }

  std::vector<BenchRow> rows;
  for (const auto& [name, instance] : corpus) {
    std::optional<std::size_t> oracle_opt;
    bool oracle_ran = false;
    for (const std::string& algo : algos) {
      dbp::Solution solution;
      auto started = std::chrono::steady_clock::now();
      try {
        solution = run_solver(instance, algo == "auto" ? pick_algo(instance) : algo,
                              nullptr);
      } catch (const dbp::DomainError& e) {
        std::cerr << "skip " << name << " / " << algo << ": " << e.what() << "\n";
        continue;
      }
      auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - started)
                         .count();
      if (!oracle_ran) {
        oracle_ran = true;
        try {
          dbp::OptOutcome outcome =
              dbp::exact_demand_bp(instance, dbp::SearchBudget{oracle_nodes});
          if (outcome.status == dbp::SearchStatus::Proven) oracle_opt = outcome.bin_count;
        } catch (const dbp::DomainError& e) {
          std::cerr << "oracle skip " << name << ": " << e.what() << "\n";
        }
      }

      std::ostringstream cells;
      cells << solution.bins.size() << ',' << dbp::area_lower_bound(instance) << ',';
      if (oracle_opt) cells << *oracle_opt;
      cells << ',';
      if (oracle_opt && *oracle_opt > 0) {
        char ratio[32];
        std::snprintf(ratio, sizeof ratio, "%.3f",
                      static_cast<double>(solution.bins.size()) /
                          static_cast<double>(*oracle_opt));
        cells << ratio;
      }
      cells << ',' << wall_ms;
      rows.push_back({name, algo, cells.str()});
    }
  }

  std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.instance, a.algo) < std::tie(b.instance, b.algo);
  });
  std::ostringstream csv;
  csv << "instance,algo,bins,area_lb,oracle_opt,ratio,wall_ms\n";
  for (const BenchRow& row : rows) {
    csv << row.instance << ',' << row.algo << ',' << row.cells << '\n';
  }
  emit(csv_path, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2D demand bin packing: solvers, oracles, generators"};
  app.require_subcommand(1);

  std::string in_path;
  std::string out_path;
  std::string sol_path;
  std::string report_path;
  std::string svg_path;
  std::string witness_path;
  std::string algo = "auto";
  std::string mode = "opt";
  std::string family = "mixed";
  std::string seeds;
  std::string dir;
  std::string csv_path;
  std::vector<long long> numbers;
  std::vector<std::string> algos{"auto"};
  long long max_nodes = 50'000'000;
  long long oracle_nodes = 5'000'000;
  double timeout_seconds = 0.0;
  std::size_t random_n = 8;
  dbp::Len random_slots = 12;
  dbp::Len random_capacity = 12;
  std::uint64_t seed = 1;

  CLI::App* solve = app.add_subcommand("solve", "pack an instance and verify the result");
  solve->add_option("--in", in_path, "instance file")->required();
  solve->add_option("--algo", algo, "auto|short|squares-eq|squares|general")
      ->check(CLI::IsMember({"auto", "short", "squares-eq", "squares", "general"}));
  solve->add_option("--out", out_path, "solution file (default stdout)");
  solve->add_option("--report", report_path, "write a JSON solve report here");

  CLI::App* verify = app.add_subcommand("verify", "check a solution against an instance");
  verify->add_option("--in", in_path, "instance file")->required();
  verify->add_option("--sol", sol_path, "solution file")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "exact search for small instances");
  oracle->add_option("--in", in_path, "instance file")->required();
  oracle->add_option("--mode", mode, "opt|one-bin|geometric")
      ->check(CLI::IsMember({"opt", "one-bin", "geometric"}));
  oracle->add_option("--max-nodes", max_nodes, "search node budget")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--timeout", timeout_seconds,
                     "seconds; deepen node budgets instead of one full-budget run")
      ->check(CLI::NonNegativeNumber);

  CLI::App* gen = app.add_subcommand("gen", "write generated instances");
  gen->require_subcommand(1);
  CLI::App* gen_gap = gen->add_subcommand("gap", "fixed 21x21 allocation-vs-packing fixture");
  gen_gap->add_option("--out", out_path, "instance file (default stdout)");
  gen_gap->add_option("--witness", witness_path, "also write the one-bin witness solution");
  CLI::App* gen_short = gen->add_subcommand(
      "3part-short", "unit-height reduction from 3-Partition");
  gen_short->add_option("--numbers", numbers, "3z comma-separated positive integers")
      ->required()
      ->delimiter(',');
  gen_short->add_option("--out", out_path, "instance file (default stdout)");
  CLI::App* gen_squares = gen->add_subcommand(
      "3part-squares", "square-task reduction from 3-Partition");
  gen_squares->add_option("--numbers", numbers, "3z comma-separated positive integers")
      ->required()
      ->delimiter(',');
  gen_squares->add_option("--out", out_path, "instance file (default stdout)");
  CLI::App* gen_random = gen->add_subcommand("random", "seeded random instance");
  gen_random->add_option("--family", family, "short|squares|mixed")
      ->check(CLI::IsMember({"short", "squares", "mixed"}));
  gen_random->add_option("--n", random_n, "task count")->required();
  gen_random->add_option("--T", random_slots, "timeline length")->required();
  gen_random->add_option("--C", random_capacity, "capacity")->required();
  gen_random->add_option("--seed", seed, "random seed")->required();
  gen_random->add_option("--out", out_path, "instance file (default stdout)");

  CLI::App* render = app.add_subcommand("render", "draw a solution as SVG");
  render->add_option("--in", in_path, "instance file")->required();
  render->add_option("--sol", sol_path, "solution file")->required();
  render->add_option("--svg", svg_path, "output SVG (default stdout)");

  CLI::App* bench = app.add_subcommand("bench", "solver comparison over a corpus, as CSV");
  bench->add_option("--dir", dir, "directory of *.dbp instance files");
  bench->add_option("--seeds", seeds, "seed range A-B for generated corpora");
  bench->add_option("--algos", algos, "comma-separated algorithm list")->delimiter(',');
  bench->add_option("--csv", csv_path, "output CSV (default stdout)");
  bench->add_option("--oracle-nodes", oracle_nodes, "node budget for the per-instance oracle")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed()) return cmd_solve(in_path, algo, out_path, report_path);
    if (verify->parsed()) return cmd_verify(in_path, sol_path);
    if (oracle->parsed()) return cmd_oracle(in_path, mode, max_nodes, timeout_seconds);
    if (gen->parsed()) {
      if (gen_gap->parsed()) return cmd_gen_gap(out_path, witness_path);
      if (gen_short->parsed()) return cmd_gen_3part_short(numbers, out_path);
      if (gen_squares->parsed()) return cmd_gen_3part_squares(numbers, out_path);
      return cmd_gen_random(family, random_n, random_slots, random_capacity, seed,
                            out_path);
    }
    if (render->parsed()) return cmd_render(in_path, sol_path, svg_path);
    return cmd_bench(dir, seeds, algos, csv_path, oracle_nodes);
  } catch (const dbp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const dbp::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
