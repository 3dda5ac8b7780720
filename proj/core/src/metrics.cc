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

#include "darwinfuzz/metrics.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "darwinfuzz/common.h"
#include "darwinfuzz/corpus.h"

namespace darwinfuzz {

std::optional<double> Effectiveness(const CampaignStats &stats) {
  if (stats.coverage_events.empty()) return std::nullopt;
  return static_cast<double>(stats.coverage_events.back().mutations) /
         static_cast<double>(stats.coverage_events.size());
}

double ExecsPerSecond(uint64_t execs, double elapsed_seconds) {
  if (execs == 0 || elapsed_seconds <= 0) return 0.0;
  return static_cast<double>(execs) / elapsed_seconds;
}

double ExecsPerSecond(const CampaignStats &stats,
                      std::chrono::steady_clock::time_point now) {
  return ExecsPerSecond(
      stats.execs, std::chrono::duration<double>(now - stats.start_time).count());
}

std::optional<uint64_t> ExecsToEdges(const CampaignStats &stats, uint64_t edges) {
  for (const auto &ev : stats.coverage_events) {
    if (ev.edges_covered >= edges) return ev.execs;
  }
  return std::nullopt;
}

namespace {

// Average ranks (1-based) of `pooled`, ties share their mean rank.
std::vector<double> MidRanks(const std::vector<double> &pooled) {
  const size_t n = pooled.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](size_t i, size_t j) { return pooled[i] < pooled[j]; });
  std::vector<double> ranks(n);
  for (size_t i = 0; i < n;) {
    size_t j = i;
    while (j + 1 < n && pooled[order[j + 1]] == pooled[order[i]]) ++j;
    const double rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2;
    for (size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double NormalUpperTail(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

}  // namespace

UTestResult MannWhitneyU(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("Mann-Whitney U needs two nonempty samples");
  }
  const size_t n = a.size();
  const size_t m = b.size();
  const size_t total = n + m;
  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  const std::vector<double> ranks = MidRanks(pooled);

  const double offset = static_cast<double>(n) * static_cast<double>(n + 1) / 2;
  double rank_sum = 0;
  for (size_t i = 0; i < n; ++i) rank_sum += ranks[i];

  UTestResult result;
  result.u = rank_sum - offset;
  const double mean = static_cast<double>(n) * static_cast<double>(m) / 2;
  constexpr double kEps = 1e-9;

  if (total <= kExactUTestMaxTotal) {
    result.exact = true;
    const double observed_dev = std::abs(result.u - mean);
    uint64_t labelings = 0, two = 0, less = 0, greater = 0;
    for (uint32_t mask = 0; mask < (1u << total); ++mask) {
      if (static_cast<size_t>(std::popcount(mask)) != n) continue;
      double sum = 0;
      for (size_t i = 0; i < total; ++i)
        if (mask & (1u << i)) sum += ranks[i];
      const double u = sum - offset;
      ++labelings;
      if (std::abs(u - mean) >= observed_dev - kEps) ++two;
      if (u <= result.u + kEps) ++less;
      if (u >= result.u - kEps) ++greater;
    }
    const double denom = static_cast<double>(labelings);
    result.p_two_sided = static_cast<double>(two) / denom;
    result.p_less = static_cast<double>(less) / denom;
    result.p_greater = static_cast<double>(greater) / denom;
    return result;
  }

  std::vector<double> sorted = pooled;
  std::sort(sorted.begin(), sorted.end());
  double tie_term = 0;
  for (size_t i = 0; i < total;) {
    size_t j = i;
    while (j < total && sorted[j] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i);
    tie_term += t * t * t - t;
    i = j;
  }
  const double N = static_cast<double>(total);
  const double variance = static_cast<double>(n) * static_cast<double>(m) / 12.0 *
                          ((N + 1) - tie_term / (N * (N - 1)));
  if (variance <= 0) return result;
  const double sigma = std::sqrt(variance);
  const double dev = result.u - mean;
  const double z_two = std::max(0.0, std::abs(dev) - 0.5) / sigma;
  result.p_two_sided = std::min(1.0, 2 * NormalUpperTail(z_two));
  result.p_less = 1.0 - NormalUpperTail((dev + 0.5) / sigma);
  result.p_greater = NormalUpperTail((dev - 0.5) / sigma);
  return result;
}

std::string FormatDouble(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

StatsRow MakeStatsRow(const CampaignStats &stats, uint64_t elapsed_ms,
                      std::optional<double> execs_per_sec) {
  StatsRow row;
  row.elapsed_ms = elapsed_ms;
  row.execs = stats.execs;
  row.mutations = stats.mutations;
  row.unique_paths = stats.unique_paths;
  row.edges_covered = stats.edges_covered;
  row.crashes = stats.crashes;
  row.effectiveness = Effectiveness(stats);
  row.execs_per_sec = execs_per_sec;
  return row;
}

std::string FormatStatsRow(const StatsRow &row) {
  std::string out;
  for (uint64_t v : {row.elapsed_ms, row.execs, row.mutations, row.unique_paths,
                     row.edges_covered, row.crashes}) {
    out += std::to_string(v);
    out += ',';
  }
  if (row.effectiveness) out += FormatDouble(*row.effectiveness);
  out += ',';
  if (row.execs_per_sec) out += FormatDouble(*row.execs_per_sec);
  return out;
}

namespace {

template <typename T>
T ParseField(std::string_view field, size_t line_no) {
  T value{};
  auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
    throw std::runtime_error("stats.csv line " + std::to_string(line_no) +
                             ": bad field '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::vector<StatsRow> ParseStatsCsv(std::string_view text) {
  std::vector<StatsRow> rows;
  size_t line_no = 0;
  bool header_seen = false;
  while (!text.empty()) {
    const size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kStatsCsvHeader) {
        throw std::runtime_error("stats.csv: unexpected header");
      }
      header_seen = true;
      continue;
    }
    std::vector<std::string_view> fields;
    size_t start = 0;
    while (true) {
      const size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 8) {
      throw std::runtime_error("stats.csv line " + std::to_string(line_no) +
                               ": expected 8 fields");
    }
    StatsRow row;
    row.elapsed_ms = ParseField<uint64_t>(fields[0], line_no);
    row.execs = ParseField<uint64_t>(fields[1], line_no);
    row.mutations = ParseField<uint64_t>(fields[2], line_no);
    row.unique_paths = ParseField<uint64_t>(fields[3], line_no);
    row.edges_covered = ParseField<uint64_t>(fields[4], line_no);
    row.crashes = ParseField<uint64_t>(fields[5], line_no);
    if (!fields[6].empty()) row.effectiveness = ParseField<double>(fields[6], line_no);
    if (!fields[7].empty()) row.execs_per_sec = ParseField<double>(fields[7], line_no);
    rows.push_back(row);
  }
  if (!header_seen) throw std::runtime_error("stats.csv: missing header");
  return rows;
}

std::vector<StatsRow> LoadStatsCsv(const std::filesystem::path &path) {
  const ByteArray raw = ReadFileBytes(path);
  return ParseStatsCsv(
      std::string_view(reinterpret_cast<const char *>(raw.data()), raw.size()));
}

StatsCsvWriter::StatsCsvWriter(const std::filesystem::path &path)
    : path_(path), out_(path, std::ios::trunc) {
  if (!out_) throw std::runtime_error("cannot open " + path.string());
  out_ << kStatsCsvHeader << '\n';
}

void StatsCsvWriter::Append(const StatsRow &row) {
  out_ << FormatStatsRow(row) << '\n';
  if (!out_) throw std::runtime_error("write failed: " + path_.string());
}

void StatsCsvWriter::Flush() {
  out_.flush();
  if (!out_) throw std::runtime_error("flush failed: " + path_.string());
}

}  // namespace darwinfuzz
