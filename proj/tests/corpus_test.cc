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

#include "darwinfuzz/corpus.h"

#include <unistd.h>

#include <fstream>

#include "gtest/gtest.h"
#include "test_util.h"

namespace darwinfuzz {
namespace {

using testing::Bytes;
using testing::TempDir;

Feedback NewPath() {
  Feedback fb;
  fb.new_path = true;
  return fb;
}

TEST(LoadSeedsTest, BytewiseFilenameOrder) {
  TempDir dir;
  WriteFileBytes(dir / "b", Bytes("B"));
  WriteFileBytes(dir / "a", Bytes("A"));
  WriteFileBytes(dir / "B", Bytes("upper"));
  Queue q = LoadSeeds(dir.path());
  ASSERT_EQ(q.size(), 3u);
  EXPECT_EQ(q[0].data, Bytes("upper"));
  EXPECT_EQ(q[1].data, Bytes("A"));
  EXPECT_EQ(q[2].data, Bytes("B"));
  EXPECT_EQ(q.cursor(), 0u);
  EXPECT_EQ(q[0].id, 0u);
  EXPECT_EQ(q[2].id, 2u);
}

TEST(LoadSeedsTest, EmptyDirectoryFails) {
  TempDir dir;
  EXPECT_THROW(LoadSeeds(dir.path()), StartupError);
}

TEST(LoadSeedsTest, MissingDirectoryFails) {
  TempDir dir;
  EXPECT_THROW(LoadSeeds(dir / "nope"), StartupError);
}

TEST(LoadSeedsTest, SingleEmptyFile) {
  TempDir dir;
  WriteFileBytes(dir / "empty", {});
  Queue q = LoadSeeds(dir.path());
  ASSERT_EQ(q.size(), 1u);
  EXPECT_TRUE(q[0].data.empty());
}

TEST(LoadSeedsTest, OversizeFileFails) {
  TempDir dir;
  WriteFileBytes(dir / "big", ByteArray(10, 1));
  EXPECT_THROW(LoadSeeds(dir.path(), 9), StartupError);
  EXPECT_NO_THROW(LoadSeeds(dir.path(), 10));
}

TEST(LoadSeedsTest, UnreadableFileIsNamed) {
  if (geteuid() == 0) GTEST_SKIP() << "root ignores file permissions";
  TempDir dir;
  WriteFileBytes(dir / "locked", Bytes("x"));
  std::filesystem::permissions(dir / "locked", std::filesystem::perms::none);
  try {
    LoadSeeds(dir.path());
    FAIL() << "expected StartupError";
  } catch (const StartupError &e) {
    EXPECT_NE(std::string(e.what()).find("locked"), std::string::npos);
  }
}

TEST(QueueTest, AdmitRequiresNewPath) {
  Queue q;
  q.AddSeed(Bytes("s"));
  EXPECT_FALSE(q.Admit(Bytes("x"), Feedback{}, {}));
  EXPECT_EQ(q.size(), 1u);
  EXPECT_TRUE(q.Admit(Bytes("y"), NewPath(), {.parent_id = 0, .found_at_exec = 12}));
  ASSERT_EQ(q.size(), 2u);
  EXPECT_EQ(q[1].id, 1u);
  EXPECT_EQ(q[1].parent_id, 0u);
  EXPECT_EQ(q[1].found_at_exec, 12u);
  EXPECT_EQ(q.finds_this_cycle(), 1u);
}

TEST(QueueTest, IdsStrictlyIncrease) {
  Queue q;
  q.AddSeed({});
  for (int i = 0; i < 5; ++i) q.Admit(Bytes("z"), NewPath(), {});
  for (size_t i = 0; i < q.size(); ++i) EXPECT_EQ(q[i].id, i);
}

TEST(QueueTest, OversizeAdmitIsCountedNotFatal) {
  Queue q(4);
  q.AddSeed(Bytes("ab"));
  EXPECT_FALSE(q.Admit(Bytes("abcde"), NewPath(), {}));
  EXPECT_EQ(q.rejected_oversize(), 1u);
  EXPECT_EQ(q.size(), 1u);
  EXPECT_THROW(q.AddSeed(Bytes("abcde")), StartupError);
}

TEST(QueueTest, CyclesThroughEntries) {
  Queue q;
  q.AddSeed(Bytes("A"));
  q.AddSeed(Bytes("B"));
  EXPECT_EQ(q.NextEntry().data, Bytes("A"));
  EXPECT_EQ(q.NextEntry().data, Bytes("B"));
  EXPECT_EQ(q.cycle_count(), 0u);
  EXPECT_TRUE(q.AtCycleEnd());
  EXPECT_EQ(q.NextEntry().data, Bytes("A"));
  EXPECT_EQ(q.cycle_count(), 1u);
}

TEST(QueueTest, SingleEntryRepeats) {
  Queue q;
  q.AddSeed(Bytes("A"));
  for (uint64_t i = 0; i < 5; ++i) {
    EXPECT_EQ(q.NextEntry().data, Bytes("A"));
    EXPECT_EQ(q.cycle_count(), i);
  }
}

TEST(QueueTest, AdmittedEntryVisitedBeforeWrap) {
  Queue q;
  q.AddSeed(Bytes("A"));
  q.AddSeed(Bytes("B"));
  q.NextEntry();
  q.NextEntry();
  q.Admit(Bytes("C"), NewPath(), {});
  EXPECT_FALSE(q.AtCycleEnd());
  EXPECT_EQ(q.NextEntry().data, Bytes("C"));
  EXPECT_EQ(q.cycle_count(), 0u);
  EXPECT_EQ(q.NextEntry().data, Bytes("A"));
  EXPECT_EQ(q.cycle_count(), 1u);
}

TEST(QueueTest, WrapResetsFinds) {
  Queue q;
  q.AddSeed(Bytes("A"));
  q.NextEntry();
  q.Admit(Bytes("B"), NewPath(), {});
  q.NextEntry();
  EXPECT_EQ(q.finds_this_cycle(), 1u);
  q.NextEntry();
  EXPECT_EQ(q.finds_this_cycle(), 0u);
}

TEST(QueueTest, CursorStaysBounded) {
  Queue q;
  q.AddSeed(Bytes("A"));
  for (int i = 0; i < 20; ++i) {
    q.NextEntry();
    if (i % 3 == 0) q.Admit(Bytes("n"), NewPath(), {});
    EXPECT_LE(q.cursor(), q.size());
  }
}

TEST(FileBytesTest, RoundTrip) {
  TempDir dir;
  ByteArray data = {0, 1, 2, 255, 0};
  WriteFileBytes(dir / "f", data);
  EXPECT_EQ(ReadFileBytes(dir / "f"), data);
}

}  // namespace
}  // namespace darwinfuzz
