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

#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "cli.h"
#include "darwinfuzz/metrics.h"

namespace {

using namespace darwinfuzz;

int Run(const cli::RunCommand &cmd) {
  if (cmd.seed_from_clock) std::cout << "seed: " << cmd.config.seed << std::endl;
  const CampaignStats stats = RunCampaign(cmd.config);
  const auto eff = Effectiveness(stats);
  std::cout << "execs: " << stats.execs << "\n"
            << "unique_paths: " << stats.unique_paths << "\n"
            << "edges_covered: " << stats.edges_covered << "\n"
            << "crashes: " << stats.crashes << "\n"
            << "effectiveness: " << (eff ? FormatDouble(*eff) : "n/a") << "\n"
            << "execs_per_sec: "
            << FormatDouble(ExecsPerSecond(stats.execs, stats.wall_seconds)) << "\n";
  return 0;
}

int Bench(const cli::BenchCommand &cmd) {
  const auto cells = cli::RunBench(cmd.plan, cmd.output_dir);
  for (const auto &c : cells) {
    std::cout << c.target << ' ' << c.scheduler
              << " median_unique_paths=" << c.median_unique_paths
              << " median_edges=" << c.median_edges;
    if (c.p_vs_first) std::cout << " p_vs_first=" << *c.p_vs_first;
    std::cout << '\n';
  }
  std::cout << "summary: " << (cmd.output_dir / "summary.csv").string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    const cli::Command command = cli::ParseArgs(args);
    if (auto *run = std::get_if<cli::RunCommand>(&command)) return Run(*run);
    if (auto *cmp = std::get_if<cli::CompareCommand>(&command)) {
      cli::RunCompare(*cmp, std::cout);
      return 0;
    }
    return Bench(std::get<cli::BenchCommand>(command));
  } catch (const cli::HelpRequested &help) {
    std::cout << help.what();
    return 0;
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const StartupError &e) {
    std::cerr << "startup error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
