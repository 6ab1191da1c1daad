// Copyright 2026 The Authors.
//
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

// cmt: solve, verify and generate colored matroidal Tverberg instances.
//
// Exit codes: 0 success, 1 error, 2 solver preconditions not met,
// 3 exhaustive search found no partition.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cmt/cmt.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitNoPartition = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cmt::Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw cmt::Error("cannot write " + path);
  out << text;
}

cmt::LoadedInstance load_file(const std::string& path) {
  return cmt::load(cmt::parse_instance(read_file(path)));
}

void print_report(const cmt::RunReport& rep, bool json) {
  if (json) {
    std::cout << cmt::to_json(rep).dump(2) << '\n';
  } else {
    std::cout << cmt::to_text(rep);
  }
}

cmt::Family parse_family(const std::string& s) {
  if (auto f = cmt::family_from_string(s)) return *f;
  throw CLI::ValidationError("--family",
                             "unknown family '" + s +
                                 "' (gf2, gf3, rational, affine, uniform, graphic)");
}

struct SolveArgs {
  std::string file;
  bool json = false;
  std::string partition_out;
  bool check_invariants = false;
};

int run_solve(const SolveArgs& a) {
  const auto inst = load_file(a.file);
  cmt::SolverOptions opt;
  opt.check_invariants = a.check_invariants || opt.check_invariants;
  cmt::SolveStats stats;
  cmt::RunReport rep;
  const auto t0 = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    cmt::Partition p;
    switch (inst.mode) {
      case cmt::SolveMode::kGeneral:
        p = cmt::solve_general(*inst.matroid, inst.sequence, *inst.coloring,
                               inst.r, opt, &stats);
        break;
      case cmt::SolveMode::kSpecial:
        p = cmt::solve_special(*inst.matroid, inst.sequence, *inst.coloring,
                               inst.r, opt, &stats);
        break;
      case cmt::SolveMode::kNoncolor:
        p = cmt::solve_noncolor(*inst.matroid, inst.sequence, inst.r, opt,
                                &stats);
        break;
    }
    rep.outcome = cmt::RunReport::Outcome::kPartition;
    rep.parts = cmt::part_indices(p);
    rep.certificate = p.certificate;
  } catch (const cmt::PreconditionViolated& e) {
    rep.outcome = cmt::RunReport::Outcome::kPreconditionViolated;
    rep.message = e.what();
    code = kExitPrecondition;
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  rep.oracle_calls = stats.oracle_calls;
  rep.cycle_iterations = stats.cycle_iterations;
  rep.restarts = stats.restarts;
  rep.recursion_depth = stats.recursion_depth;
  print_report(rep, a.json);
  if (code == kExitOk && !a.partition_out.empty()) {
    write_file(a.partition_out, cmt::emit_partition_file(rep.parts));
  }
  return code;
}

int run_verify(const std::string& file, const std::string& partition_file) {
  const auto inst = load_file(file);
  const auto idx = cmt::parse_partition_file(read_file(partition_file));
  std::vector<cmt::IndexedSequence> parts;
  for (const auto& p : idx) {
    for (const auto i : p) {
      if (i >= inst.sequence.size()) {
        throw cmt::Error("partition index " + std::to_string(i) +
                         " outside a sequence of length " +
                         std::to_string(inst.sequence.size()));
      }
    }
    parts.push_back(inst.sequence.with_indices(p));
  }
  const auto rep =
      inst.coloring
          ? cmt::verify_partition(*inst.matroid, inst.sequence, *inst.coloring,
                                  inst.r, parts)
          : cmt::verify_partition(*inst.matroid, inst.sequence, inst.r, parts);
  if (rep.ok) {
    std::cout << "ok\n";
    return kExitOk;
  }
  std::cout << "failed " << cmt::to_string(rep.failed) << ": " << rep.detail
            << '\n';
  return kExitError;
}

int run_brute(const std::string& file, std::size_t budget, bool json) {
  const auto inst = load_file(file);
  cmt::BruteForceBudget b;
  b.max_entries = budget;
  b.max_r = std::max(b.max_r, inst.r);
  const auto calls0 = inst.matroid->calls();
  const auto t0 = std::chrono::steady_clock::now();
  const auto found =
      inst.mode == cmt::SolveMode::kNoncolor || !inst.coloring
          ? cmt::brute_force_solve(*inst.matroid, inst.sequence, inst.r, b)
          : cmt::brute_force_solve(*inst.matroid, inst.sequence,
                                   *inst.coloring, inst.r, b);
  cmt::RunReport rep;
  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  rep.oracle_calls = inst.matroid->calls() - calls0;
  if (found) {
    rep.outcome = cmt::RunReport::Outcome::kPartition;
    rep.parts = cmt::part_indices(*found);
    rep.certificate = found->certificate;
  } else {
    rep.outcome = cmt::RunReport::Outcome::kNoPartition;
  }
  print_report(rep, json);
  return found ? kExitOk : kExitNoPartition;
}

struct BenchArgs {
  std::string family = "uniform";
  std::vector<std::size_t> ranks{5};
  std::size_t r_min = 2;
  std::size_t r_max = 50;
  std::size_t extra_length = 0;
  std::size_t samples = 1;
  std::uint64_t seed = 1;
};

// `samples` solve_general runs per (m, r), each on a fresh instance of
// length m(r-1)+1+extra_length using exactly m colors.
int run_bench(const BenchArgs& a) {
  const auto family = parse_family(a.family);
  std::cout << "family,m,r,len,oracle_calls,iterations,restarts,wall_ms\n";
  for (const auto m : a.ranks) {
    for (std::size_t r = a.r_min; r <= a.r_max; ++r) {
      for (std::size_t k = 0; k < a.samples; ++k) {
        cmt::RandomRequest req;
        req.family = family;
        req.m = m;
        req.r = r;
        req.target_length = m * (r - 1) + 1 + a.extra_length;
        req.seed = a.seed + r + 1000 * k;
        req.profile = cmt::Profile::kSpecial;
        req.colors = m;
        const auto inst = cmt::load(cmt::gen_random_instance(req));
        cmt::SolveStats stats;
        cmt::SolverOptions opt;
        const auto t0 = std::chrono::steady_clock::now();
        cmt::solve_general(*inst.matroid, inst.sequence, *inst.coloring, r, opt,
                           &stats);
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
        std::cout << a.family << ',' << m << ',' << r << ','
                  << inst.sequence.size() << ',' << stats.oracle_calls << ','
                  << stats.cycle_iterations << ',' << stats.restarts << ','
                  << ms << '\n';
      }
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colored matroidal Tverberg partitions"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("file", solve_args.file, "Instance file")->required();
  solve->add_flag("--json", solve_args.json, "Print the report as JSON");
  solve->add_option("--write-partition", solve_args.partition_out,
                    "Write the partition to this file");
  solve->add_flag("--check-invariants", solve_args.check_invariants,
                  "Assert the cycle invariants at every step");

  std::string verify_file;
  std::string verify_partition_file;
  auto* verify =
      app.add_subcommand("verify", "Check a partition file against an instance");
  verify->add_option("file", verify_file, "Instance file")->required();
  verify->add_option("partition", verify_partition_file, "Partition file")
      ->required();

  std::string brute_file;
  std::size_t brute_budget = 12;
  bool brute_json = false;
  auto* brute = app.add_subcommand("brute", "Exhaustive partition search");
  brute->add_option("file", brute_file, "Instance file")->required();
  brute->add_option("--budget", brute_budget, "Maximum sequence length")
      ->capture_default_str();
  brute->add_flag("--json", brute_json, "Print the report as JSON");

  std::string tight_family;
  std::size_t tight_rank = 2;
  std::size_t tight_r = 2;
  std::uint64_t tight_seed = 0;
  auto* tight = app.add_subcommand(
      "gen-tight", "Print a tight instance (length m(r-1), no partition)");
  tight->add_option("--family", tight_family, "Matroid family")->required();
  tight->add_option("--rank", tight_rank, "Rank m")->required();
  tight->add_option("--r", tight_r, "Number of parts r")->required();
  tight->add_option("--seed", tight_seed, "Random seed")->capture_default_str();

  std::string random_family;
  std::string random_profile = "general";
  std::optional<std::size_t> random_colors;
  cmt::RandomRequest req;
  auto* random = app.add_subcommand("gen-random", "Print a random instance");
  random->add_option("--family", random_family, "Matroid family")->required();
  random->add_option("--rank", req.m, "Rank m")->required();
  random->add_option("--r", req.r, "Number of parts r")->required();
  random->add_option("--length", req.target_length, "Target sequence length");
  random->add_option("--seed", req.seed, "Random seed")->capture_default_str();
  random->add_option("--profile", random_profile, "general or special")
      ->check(CLI::IsMember({"general", "special"}))
      ->capture_default_str();
  random->add_option("--colors", random_colors, "Number of colors");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Sweep r and print CSV");
  bench->add_option("--family", bench_args.family, "Matroid family")
      ->capture_default_str();
  bench->add_option("--ranks", bench_args.ranks, "Ranks m to sweep")
      ->capture_default_str();
  bench->add_option("--r-min", bench_args.r_min)->capture_default_str();
  bench->add_option("--r-max", bench_args.r_max)->capture_default_str();
  bench->add_option("--extra-length", bench_args.extra_length,
                    "Entries beyond m(r-1)+1")
      ->capture_default_str();
  bench->add_option("--samples", bench_args.samples, "Instances per (m, r)")
      ->capture_default_str();
  bench->add_option("--seed", bench_args.seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*solve) return run_solve(solve_args);
    if (*verify) return run_verify(verify_file, verify_partition_file);
    if (*brute) return run_brute(brute_file, brute_budget, brute_json);
    if (*tight) {
      std::cout << cmt::emit_instance(cmt::gen_tight_instance(
          parse_family(tight_family), tight_rank, tight_r, tight_seed));
      return kExitOk;
    }
    if (*random) {
      req.family = parse_family(random_family);
      req.profile = random_profile == "special" ? cmt::Profile::kSpecial
                                                : cmt::Profile::kGeneral;
      req.colors = random_colors;
      std::cout << cmt::emit_instance(cmt::gen_random_instance(req));
      return kExitOk;
    }
    if (*bench) return run_bench(bench_args);
  } catch (const cmt::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitError;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
