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

#include "bench.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numeric>
#include <thread>

#include "cli.h"
#include "darwinfuzz/corpus.h"
#include "darwinfuzz/metrics.h"

namespace darwinfuzz::cli {

namespace fs = std::filesystem;

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> SplitList(std::string_view value) {
  std::vector<std::string> out;
  while (true) {
    const size_t comma = value.find(',');
    const std::string_view item = Trim(value.substr(0, comma));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    value = value.substr(comma + 1);
  }
  return out;
}

uint64_t ParseUint(std::string_view key, std::string_view value) {
  uint64_t v = 0;
  auto res = std::from_chars(value.data(), value.data() + value.size(), v);
  if (value.empty() || res.ec != std::errc() || res.ptr != value.data() + value.size())
    throw UsageError("plan: " + std::string(key) + ": not a number: '" +
                     std::string(value) + "'");
  return v;
}

fs::path Resolve(const fs::path &base, std::string_view value) {
  fs::path p{std::string(value)};
  return p.is_relative() && !base.empty() ? base / p : p;
}

std::string Sanitize(std::string_view s) {
  std::string out;
  for (char c : s) out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  return out;
}

double Mean(const std::vector<double> &v) {
  return v.empty() ? 0 : std::accumulate(v.begin(), v.end(), 0.0) / v.size();
}

}  // namespace

double Median(std::vector<double> values) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  const size_t n = values.size();
  return n % 2 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2;
}

BenchPlan ParseBenchPlan(std::string_view text, const fs::path &base_dir) {
  BenchPlan plan;
  size_t line_no = 0;
  while (!text.empty()) {
    const size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = Trim(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw UsageError("plan line " + std::to_string(line_no) + ": expected key = value");
    const std::string_view key = Trim(line.substr(0, eq));
    const std::string_view value = Trim(line.substr(eq + 1));
    if (key == "targets") {
      plan.targets = SplitList(value);
    } else if (key == "schedulers") {
      plan.schedulers = SplitList(value);
    } else if (key == "runs") {
      plan.runs = ParseUint(key, value);
    } else if (key == "execs") {
      plan.execs = ParseUint(key, value);
    } else if (key == "duration") {
      plan.duration = ParseDuration(value);
    } else if (key == "base_seed") {
      plan.base_seed = ParseUint(key, value);
    } else if (key == "seeds") {
      plan.seeds_dir = Resolve(base_dir, value);
    } else if (key == "dict") {
      plan.dict = Resolve(base_dir, value);
    } else if (key == "encoding") {
      if (value != "binary" && value != "real")
        throw UsageError("plan: encoding must be binary or real");
      plan.es.encoding = value == "real" ? Encoding::kReal : Encoding::kBinary;
    } else if (key == "mu") {
      plan.es.mu = ParseUint(key, value);
    } else if (key == "lambda") {
      plan.es.lambda = ParseUint(key, value);
    } else if (key == "window") {
      plan.es.window = ParseUint(key, value);
    } else if (key == "havoc_rounds") {
      plan.havoc_rounds = ParseUint(key, value);
    } else if (key == "timeout_ms") {
      plan.timeout = std::chrono::milliseconds(ParseUint(key, value));
    } else if (key == "jobs") {
      plan.jobs = std::max<uint64_t>(1, ParseUint(key, value));
    } else {
      throw UsageError("plan line " + std::to_string(line_no) + ": unknown key '" +
                       std::string(key) + "'");
    }
  }
  if (plan.targets.empty()) throw UsageError("plan: targets is required");
  if (plan.schedulers.empty()) throw UsageError("plan: schedulers is required");
  if (plan.runs == 0) throw UsageError("plan: runs must be >= 1");
  if (plan.execs.has_value() == plan.duration.has_value())
    throw UsageError("plan: exactly one of execs or duration is required");
  for (auto &s : plan.schedulers) {
    // Static distribution paths are plan-relative as well.
    if (s.starts_with("static:")) s = "static:" + Resolve(base_dir, s.substr(7)).string();
    ParseSchedulerSpec(s);
  }
  for (const auto &t : plan.targets) ParseBuiltinTarget(t);
  return plan;
}

BenchPlan LoadBenchPlan(const fs::path &path) {
  ByteArray raw;
  try {
    raw = ReadFileBytes(path);
  } catch (const StartupError &e) {
    throw UsageError(e.what());
  }
  return ParseBenchPlan(
      std::string_view(reinterpret_cast<const char *>(raw.data()), raw.size()),
      path.parent_path());
}

CampaignConfig MakeRunConfig(const BenchPlan &plan, const std::string &target,
                             const std::string &scheduler, size_t run) {
  CampaignConfig c;
  c.seed = plan.base_seed + run;
  c.exec_budget = plan.execs;
  c.duration = plan.duration;
  c.havoc_rounds_per_entry = plan.havoc_rounds;
  c.scheduler = ParseSchedulerSpec(scheduler);
  c.scheduler.es = plan.es;
  c.target = ParseBuiltinTarget(target);
  c.target.timeout = plan.timeout;
  if (plan.seeds_dir) {
    c.input_dir = plan.seeds_dir;
  } else {
    c.inline_seeds = {ByteArray{}};
  }
  c.dict_path = plan.dict;
  return c;
}

std::vector<CellSummary> RunBench(const BenchPlan &plan, const fs::path &output_dir) {
  struct Job {
    size_t cell;
    size_t run;
    CampaignConfig config;
  };
  std::vector<CellSummary> cells;
  std::vector<Job> jobs;
  for (size_t t = 0; t < plan.targets.size(); ++t) {
    for (size_t s = 0; s < plan.schedulers.size(); ++s) {
      const fs::path cell_dir = output_dir /
                                (std::to_string(t) + "_" + Sanitize(plan.targets[t])) /
                                (std::to_string(s) + "_" + Sanitize(plan.schedulers[s]));
      CellSummary cell;
      cell.target = plan.targets[t];
      cell.scheduler = plan.schedulers[s];
      cell.runs.resize(plan.runs);
      for (size_t r = 0; r < plan.runs; ++r) {
        Job job{cells.size(), r,
                MakeRunConfig(plan, plan.targets[t], plan.schedulers[s], r)};
        job.config.output_dir = cell_dir / ("run_" + std::to_string(r));
        jobs.push_back(std::move(job));
      }
      cells.push_back(std::move(cell));
    }
  }

  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    while (!failed) {
      const size_t i = next++;
      if (i >= jobs.size()) return;
      try {
        const CampaignStats stats = RunCampaign(jobs[i].config);
        RunSummary &rs = cells[jobs[i].cell].runs[jobs[i].run];
        rs.unique_paths = stats.unique_paths;
        rs.edges_covered = stats.edges_covered;
        rs.effectiveness = Effectiveness(stats);
        rs.execs = stats.execs;
        rs.execs_per_sec = ExecsPerSecond(stats.execs, stats.wall_seconds);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  const size_t workers = std::min(plan.jobs, jobs.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto &th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  const size_t per_target = plan.schedulers.size();
  for (size_t c = 0; c < cells.size(); ++c) {
    CellSummary &cell = cells[c];
    std::vector<double> paths, edges, eff;
    for (const auto &r : cell.runs) {
      paths.push_back(static_cast<double>(r.unique_paths));
      edges.push_back(static_cast<double>(r.edges_covered));
      if (r.effectiveness) eff.push_back(*r.effectiveness);
    }
    cell.median_unique_paths = Median(paths);
    cell.mean_unique_paths = Mean(paths);
    cell.median_edges = Median(edges);
    cell.mean_edges = Mean(edges);
    if (!eff.empty()) cell.median_effectiveness = Median(eff);
    const size_t first = c - c % per_target;
    if (c != first && plan.runs >= 2) {
      std::vector<double> base;
      for (const auto &r : cells[first].runs)
        base.push_back(static_cast<double>(r.unique_paths));
      const UTestResult u = MannWhitneyU(paths, base);
      cell.u_vs_first = u.u;
      cell.p_vs_first = u.p_two_sided;
    }
  }

  fs::create_directories(output_dir);
  std::ofstream summary(output_dir / "summary.csv", std::ios::trunc);
  summary << kSummaryCsvHeader << '\n';
  auto opt = [](const std::optional<double> &v) {
    return v ? FormatDouble(*v) : std::string();
  };
  for (const auto &cell : cells) {
    summary << cell.target << ',' << cell.scheduler << ',' << cell.runs.size() << ','
            << FormatDouble(cell.median_unique_paths) << ','
            << FormatDouble(cell.mean_unique_paths) << ','
            << FormatDouble(cell.median_edges) << ',' << FormatDouble(cell.mean_edges)
            << ',' << opt(cell.median_effectiveness) << ',' << opt(cell.u_vs_first)
            << ',' << opt(cell.p_vs_first) << '\n';
  }
  if (!summary) throw std::runtime_error("cannot write summary.csv");
  return cells;
}

}  // namespace darwinfuzz::cli
