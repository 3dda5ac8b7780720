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

// Campaign statistics, the scheduling-effectiveness metric, stats.csv I/O and
// the Mann-Whitney U test used to compare experiment arms.
#ifndef DARWINFUZZ_METRICS_H_
#define DARWINFUZZ_METRICS_H_

#include <array>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "darwinfuzz/mutators.h"

namespace darwinfuzz {

// A new unique path found while fuzzing (seed priming excluded).
struct CoverageEvent {
  uint64_t execs = 0;
  uint64_t mutations = 0;
  uint64_t edges_covered = 0;
};

struct CampaignStats {
  uint64_t execs = 0;
  // Operator applications: the sum of havoc stack sizes.
  uint64_t mutations = 0;
  uint64_t unique_paths = 0;
  uint64_t edges_covered = 0;
  uint64_t crashes = 0;  // unique crashing paths
  uint64_t hangs = 0;
  uint64_t seed_paths = 0;  // unique paths after seed priming
  uint64_t splice_rounds = 0;
  std::vector<CoverageEvent> coverage_events;
  std::array<uint64_t, kNumMutators> operator_selections{};
  std::chrono::steady_clock::time_point start_time{};
  double wall_seconds = 0;  // set when the campaign ends
};

// Average number of mutations between consecutive coverage events, counted
// from the start of fuzzing: mutations at the last event divided by the number
// of events. Mutations spent after the last event do not count. Absent with
// no events.
std::optional<double> Effectiveness(const CampaignStats &stats);

double ExecsPerSecond(uint64_t execs, double elapsed_seconds);
double ExecsPerSecond(const CampaignStats &stats,
                      std::chrono::steady_clock::time_point now);

// First fuzzing execution count at which edges_covered reached `edges`.
std::optional<uint64_t> ExecsToEdges(const CampaignStats &stats, uint64_t edges);

struct UTestResult {
  double u = 0;            // U statistic of the first sample
  double p_two_sided = 1;
  double p_less = 1;       // alternative: first sample tends to be smaller
  double p_greater = 1;    // alternative: first sample tends to be larger
  bool exact = false;
};

inline constexpr size_t kExactUTestMaxTotal = 12;

// Midrank U. Exact p by enumerating all C(n+m, n) labelings when n + m <= 12,
// otherwise the normal approximation with tie-corrected variance and a 0.5
// continuity correction. Throws std::invalid_argument on an empty sample.
UTestResult MannWhitneyU(std::span<const double> a, std::span<const double> b);

// ---- stats.csv --------------------------------------------------------------

inline constexpr std::string_view kStatsCsvHeader =
    "elapsed_ms,execs,mutations,unique_paths,edges_covered,crashes,"
    "effectiveness,execs_per_sec";

struct StatsRow {
  uint64_t elapsed_ms = 0;
  uint64_t execs = 0;
  uint64_t mutations = 0;
  uint64_t unique_paths = 0;
  uint64_t edges_covered = 0;
  uint64_t crashes = 0;
  std::optional<double> effectiveness;
  std::optional<double> execs_per_sec;

  bool operator==(const StatsRow &) const = default;
};

StatsRow MakeStatsRow(const CampaignStats &stats, uint64_t elapsed_ms,
                      std::optional<double> execs_per_sec);

// Absent values are empty fields; reals use shortest round-trip form.
std::string FormatStatsRow(const StatsRow &row);
std::vector<StatsRow> ParseStatsCsv(std::string_view text);
std::vector<StatsRow> LoadStatsCsv(const std::filesystem::path &path);

// Append-only stats.csv sink. Write failures throw std::runtime_error.
class StatsCsvWriter {
 public:
  explicit StatsCsvWriter(const std::filesystem::path &path);
  void Append(const StatsRow &row);
  void Flush();

 private:
  std::filesystem::path path_;
  std::ofstream out_;
};

std::string FormatDouble(double v);

}  // namespace darwinfuzz

#endif  // DARWINFUZZ_METRICS_H_
