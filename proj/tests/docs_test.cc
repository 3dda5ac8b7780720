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

// The docs embed constant tables between <!-- BEGIN name --> and
// <!-- END name --> markers. Each block must equal the rendering of the code
// constants.
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bench.h"
#include "darwinfuzz/constant_tables.h"
#include "gtest/gtest.h"

namespace darwinfuzz {
namespace {

namespace fs = std::filesystem;

const fs::path kRoot = DARWINFUZZ_SOURCE_DIR;

std::string Slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> Markdown() {
  std::vector<fs::path> out = {kRoot / "README.md"};
  for (const auto &e : fs::directory_iterator(kRoot / "docs"))
    if (e.path().extension() == ".md") out.push_back(e.path());
  return out;
}

TEST(DocsTest, EveryTableIsEmbeddedAndCurrent) {
  for (std::string_view name : ConstantTableNames()) {
    const std::string begin = "<!-- BEGIN " + std::string(name) + " -->\n";
    const std::string end = "<!-- END " + std::string(name) + " -->";
    int found = 0;
    for (const fs::path &doc : Markdown()) {
      const std::string text = Slurp(doc);
      for (size_t pos = text.find(begin); pos != std::string::npos;
           pos = text.find(begin, pos + 1)) {
        const size_t body = pos + begin.size();
        const size_t stop = text.find(end, body);
        ASSERT_NE(stop, std::string::npos) << doc << ": unterminated " << name;
        EXPECT_EQ(text.substr(body, stop - body), RenderConstantTable(name))
            << doc << ": table '" << name << "' is stale";
        ++found;
      }
    }
    EXPECT_GE(found, 1) << "table '" << name << "' is not embedded in any doc";
  }
}

TEST(DocsTest, MarkersNameKnownTables) {
  const auto names = ConstantTableNames();
  for (const fs::path &doc : Markdown()) {
    const std::string text = Slurp(doc);
    for (size_t pos = text.find("<!-- BEGIN "); pos != std::string::npos;
         pos = text.find("<!-- BEGIN ", pos + 1)) {
      const size_t start = pos + 11;
      const std::string name = text.substr(start, text.find(' ', start) - start);
      EXPECT_NE(std::find(names.begin(), names.end(), name), names.end()) << doc << ": " << name;
    }
  }
}

TEST(DocsTest, ExperimentPlansParse) {
  int plans = 0;
  for (const auto &e : fs::directory_iterator(kRoot / "experiments")) {
    if (e.path().extension() != ".plan") continue;
    ++plans;
    EXPECT_NO_THROW(cli::LoadBenchPlan(e.path())) << e.path();
  }
  EXPECT_GE(plans, 3);
}

TEST(DocsTest, UnknownTableThrows) {
  EXPECT_THROW(RenderConstantTable("nope"), std::out_of_range);
}

}  // namespace
}  // namespace darwinfuzz
