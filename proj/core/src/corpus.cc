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

#include <algorithm>
#include <fstream>
#include <iterator>
#include <string>
#include <system_error>

namespace darwinfuzz {

namespace fs = std::filesystem;

const TestCase &Queue::AddSeed(ByteArray data) {
  if (data.size() > max_len_) {
    throw StartupError("seed of " + std::to_string(data.size()) +
                       " bytes exceeds max input length " +
                       std::to_string(max_len_));
  }
  TestCase tc;
  tc.data = std::move(data);
  tc.id = entries_.size();
  entries_.push_back(std::move(tc));
  return entries_.back();
}

bool Queue::Admit(std::span<const uint8_t> candidate, const Feedback &feedback,
                  const Provenance &provenance) {
  if (!feedback.new_path) return false;
  if (candidate.size() > max_len_) {
    ++rejected_oversize_;
    return false;
  }
  TestCase tc;
  tc.data.assign(candidate.begin(), candidate.end());
  tc.id = entries_.size();
  tc.parent_id = provenance.parent_id;
  tc.found_at_exec = provenance.found_at_exec;
  tc.via_splice = provenance.via_splice;
  entries_.push_back(std::move(tc));
  ++finds_this_cycle_;
  return true;
}

const TestCase &Queue::NextEntry() {
  if (cursor_ >= entries_.size()) {
    cursor_ = 0;
    ++cycle_count_;
    finds_this_cycle_ = 0;
  }
  return entries_[cursor_++];
}

ByteArray ReadFileBytes(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StartupError("cannot read file: " + path.string());
  ByteArray data((std::istreambuf_iterator<char>(in)),
                 std::istreambuf_iterator<char>());
  if (in.bad()) throw StartupError("cannot read file: " + path.string());
  return data;
}

void WriteFileBytes(const fs::path &path, std::span<const uint8_t> data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char *>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("cannot write file: " + path.string());
}

Queue LoadSeeds(const fs::path &dir, size_t max_len) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw StartupError("seed directory does not exist: " + dir.string());
  }
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  if (ec) throw StartupError("cannot list seed directory: " + dir.string());
  if (files.empty()) {
    throw StartupError("seed directory has no regular files: " + dir.string());
  }
  // std::string comparison is bytewise.
  std::sort(files.begin(), files.end(), [](const fs::path &a, const fs::path &b) {
    return a.filename().string() < b.filename().string();
  });
  Queue queue(max_len);
  for (const auto &file : files) {
    ByteArray data = ReadFileBytes(file);
    if (data.size() > max_len) {
      throw StartupError("seed " + file.string() + " exceeds max length " +
                         std::to_string(max_len));
    }
    queue.AddSeed(std::move(data));
  }
  return queue;
}

}  // namespace darwinfuzz
