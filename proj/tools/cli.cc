// Copyright 2026 The darwinfuzz Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "darwinfuzz/metrics.h"

namespace darwinfuzz::cli {

std::chrono::milliseconds ParseDuration(std::string_view text) {
  const auto digits_end = std::find_if(text.begin(), text.end(), [](char c) {
    return !(c >= '0' && c <= '9');
  });
  const std::string_view number = text.substr(0, digits_end - text.begin());
  const std::string_view unit = text.substr(number.size());
  uint64_t value = 0;
  auto res = std::from_chars(number.data(), number.data() + number.size(), value);
  if (number.empty() || res.ec != std::errc()) {
    throw UsageError("--duration: cannot parse '" + std::string(text) + "'");
  }
  uint64_t scale;
  if (unit.empty() || unit == "s") {
    scale = 1000;
  } else if (unit == "ms") {
    scale = 1;
  } else if (unit == "m") {
    scale = 60'000;
  } else if (unit == "h") {
    scale = 3'600'000;
  } else {
    throw UsageError("--duration: unknown unit in '" + std::string(text) + "'");
  }
  return std::chrono::milliseconds(value * scale);
}

namespace {

struct RunFlags {
  std::string input;
  std::string output;
  std::string target;
  std::string scheduler = "darwin";
  std::optional<uint64_t> seed;
  std::string duration;
  std::optional<uint64_t> execs;
  size_t mu = 5;
  size_t lambda = 4;
  size_t window = 512;
  std::string encoding = "binary";
  std::string dict;
  uint64_t timeout_ms = 1000;
  size_t havoc_rounds = 256;
  size_t max_len = kDefaultMaxInputLen;
};

void AddRunOptions(CLI::App &run, RunFlags &f) {
  run.add_option("-i,--input", f.input, "Seed directory")->required();
  run.add_option("-o,--output", f.output, "Output directory")->required();
  run.add_option("--target", f.target,
                 "builtin:magicparse|bitmaze|null, or exec (command after --)")
      ->required();
  run.add_option("--scheduler", f.scheduler, "uniform | darwin | static:<file>")
      ->capture_default_str();
  run.add_option("--seed", f.seed, "PRNG seed (default: time-derived, printed)");
  auto *duration = run.add_option("--duration", f.duration, "e.g. 300s, 5m, 1h");
  auto *execs = run.add_option("--execs", f.execs, "Fuzzing execution budget");
  duration->excludes(execs);
  run.add_option("--mu", f.mu, "Parallel ES searches")->capture_default_str();
  run.add_option("--lambda", f.lambda, "Children per generation")->capture_default_str();
  run.add_option("--window", f.window, "Executions per candidate evaluation")
      ->capture_default_str();
  run.add_option("--encoding", f.encoding, "binary | real")
      ->check(CLI::IsMember({"binary", "real"}))
      ->capture_default_str();
  run.add_option("--dict", f.dict, "AFL-style dictionary file");
  run.add_option("--timeout-ms", f.timeout_ms, "External target timeout")
      ->capture_default_str();
  run.add_option("--havoc-rounds", f.havoc_rounds, "Havoc executions per entry")
      ->capture_default_str();
  run.add_option("--max-len", f.max_len, "Maximum input length")->capture_default_str();
}

RunCommand BuildRun(const RunFlags &f, const std::vector<std::string> &exec_argv) {
  RunCommand cmd;
  CampaignConfig &c = cmd.config;
  c.input_dir = f.input;
  c.output_dir = f.output;
  if (f.target == "exec") {
    if (exec_argv.empty()) throw UsageError("--target exec: missing command after --");
    c.target = ExternalTarget(exec_argv, std::chrono::milliseconds(f.timeout_ms));
  } else {
    if (!exec_argv.empty())
      throw UsageError("--target: a command after -- requires --target exec");
    c.target = ParseBuiltinTarget(f.target);
    c.target.timeout = std::chrono::milliseconds(f.timeout_ms);
  }
  c.scheduler = ParseSchedulerSpec(f.scheduler);
  c.scheduler.es.mu = f.mu;
  c.scheduler.es.lambda = f.lambda;
  c.scheduler.es.window = f.window;
  c.scheduler.es.encoding = f.encoding == "real" ? Encoding::kReal : Encoding::kBinary;
  if (f.seed) {
    c.seed = *f.seed;
  } else {
    cmd.seed_from_clock = true;
    c.seed = static_cast<uint64_t>(
        std::chrono::system_clock::now().time_since_epoch().count());
  }
  if (!f.duration.empty()) c.duration = ParseDuration(f.duration);
  c.exec_budget = f.execs;
  if (!f.dict.empty()) c.dict_path = f.dict;
  if (f.timeout_ms == 0) throw UsageError("--timeout-ms must be positive");
  c.havoc_rounds_per_entry = f.havoc_rounds;
  c.max_input_len = f.max_len;
  c.Validate();
  return cmd;
}

}  // namespace

Command ParseArgs(const std::vector<std::string> &args) {
  // Everything after the first "--" is the external target command.
  std::vector<std::string> own;
  std::vector<std::string> exec_argv;
  bool after_sep = false;
  for (const auto &a : args) {
    if (!after_sep && a == "--") {
      after_sep = true;
      continue;
    }
    (after_sep ? exec_argv : own).push_back(a);
  }

  CLI::App app{"darwinfuzz: coverage-guided fuzzer with evolutionary mutation scheduling",
               "darwinfuzz"};
  app.require_subcommand(1);

  RunFlags run_flags;
  auto *run = app.add_subcommand("run", "Run one fuzzing campaign");
  AddRunOptions(*run, run_flags);

  std::vector<std::string> compare_a, compare_b;
  auto *compare = app.add_subcommand("compare", "Compare two groups of stats.csv runs");
  compare->add_option("-a", compare_a, "stats.csv files of arm A")->required();
  compare->add_option("-b", compare_b, "stats.csv files of arm B")->required();

  std::string plan_path, bench_out;
  std::optional<size_t> jobs;
  auto *bench = app.add_subcommand("bench", "Run a repetition matrix from a plan file");
  bench->add_option("plan", plan_path, "Plan file")->required();
  bench->add_option("-o,--output", bench_out, "Output directory")->required();
  bench->add_option("--jobs", jobs, "Concurrent runs (overrides the plan)");

  // CLI11 wants argv-style input in reverse order.
  std::vector<std::string> reversed(own.rbegin(), own.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError &e) {
    throw UsageError(e.what());
  }

  if (*run) return BuildRun(run_flags, exec_argv);
  if (!exec_argv.empty()) throw UsageError("unexpected arguments after --");
  if (*compare) {
    CompareCommand cmd;
    cmd.a.assign(compare_a.begin(), compare_a.end());
    cmd.b.assign(compare_b.begin(), compare_b.end());
    return cmd;
  }
  BenchCommand cmd;
  cmd.plan = LoadBenchPlan(plan_path);
  if (jobs) cmd.plan.jobs = std::max<size_t>(1, *jobs);
  cmd.output_dir = bench_out;
  return cmd;
}

void RunCompare(const CompareCommand &command, std::ostream &out) {
  auto finals = [&out](const std::vector<std::filesystem::path> &files,
                       std::string_view label) {
    std::vector<double> values;
    for (const auto &f : files) {
      const auto rows = LoadStatsCsv(f);
      if (rows.empty()) throw std::runtime_error(f.string() + ": no rows");
      values.push_back(static_cast<double>(rows.back().unique_paths));
      out << label << ' ' << f.string() << " unique_paths=" << rows.back().unique_paths
          << '\n';
    }
    return values;
  };
  const auto a = finals(command.a, "A");
  const auto b = finals(command.b, "B");
  const UTestResult u = MannWhitneyU(a, b);
  out << "median A=" << Median(a) << " B=" << Median(b) << '\n';
  out << "U=" << u.u << " p=" << std::setprecision(6) << u.p_two_sided
      << (u.exact ? " (exact)" : " (normal approx.)") << '\n';
}

}  // namespace darwinfuzz::cli
