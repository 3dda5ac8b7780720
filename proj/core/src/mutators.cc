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

#include "darwinfuzz/mutators.h"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <string>

#include "darwinfuzz/corpus.h"
#include "darwinfuzz/scheduler.h"

namespace darwinfuzz {
namespace {

static_assert(kInteresting16[18] == 32767);
static_assert(kInteresting32[26] == 2147483647);

constexpr std::array<std::string_view, kNumMutators> kNames = {
    "flip_bit",       "interesting_byte", "interesting_word",
    "interesting_dword", "sub_byte",      "add_byte",
    "sub_word",       "add_word",         "sub_dword",
    "add_dword",      "random_byte",      "delete_bytes",
    "delete_bytes",   "clone_or_insert",  "overwrite_block",
    "overwrite_extra", "insert_extra"};

uint32_t R(Rng &rng, size_t bound) {
  return rng.Below(static_cast<uint32_t>(bound));
}

bool Skip(MutatorId id, Rng &rng) {
  for (int i = 0; i < kSkipDraws[id]; ++i) rng.NextU64();
  return false;
}

// Little-endian read/write of `width` bytes at `pos`, optionally byte-swapped.
uint32_t Load(const ByteArray &d, size_t pos, int width, bool big_endian) {
  uint32_t v = 0;
  for (int i = 0; i < width; ++i) {
    const int shift = big_endian ? 8 * (width - 1 - i) : 8 * i;
    v |= static_cast<uint32_t>(d[pos + i]) << shift;
  }
  return v;
}

void Store(ByteArray &d, size_t pos, int width, bool big_endian, uint32_t v) {
  for (int i = 0; i < width; ++i) {
    const int shift = big_endian ? 8 * (width - 1 - i) : 8 * i;
    d[pos + i] = static_cast<uint8_t>(v >> shift);
  }
}

bool InterestingWide(MutatorId id, ByteArray &d, Rng &rng, int width) {
  const size_t n = d.size();
  if (n < static_cast<size_t>(width)) return Skip(id, rng);
  const bool be = R(rng, 2);
  const size_t pos = R(rng, n - width + 1);
  const uint32_t value =
      width == 2 ? static_cast<uint16_t>(kInteresting16[R(rng, kInteresting16.size())])
                 : static_cast<uint32_t>(kInteresting32[R(rng, kInteresting32.size())]);
  Store(d, pos, width, be, value);
  return true;
}

bool ArithWide(MutatorId id, ByteArray &d, Rng &rng, int width, bool add) {
  const size_t n = d.size();
  if (n < static_cast<size_t>(width)) return Skip(id, rng);
  const bool be = R(rng, 2);
  const size_t pos = R(rng, n - width + 1);
  const uint32_t delta = 1 + R(rng, kArithMax);
  const uint32_t mask = width == 2 ? 0xffffu : 0xffffffffu;
  const uint32_t v = Load(d, pos, width, be);
  Store(d, pos, width, be, (add ? v + delta : v - delta) & mask);
  return true;
}

uint8_t RepeatedByte(const ByteArray &d, Rng &rng) {
  const bool from_input = R(rng, 2);
  if (from_input && !d.empty()) return d[R(rng, d.size())];
  return static_cast<uint8_t>(R(rng, 256));
}

}  // namespace

std::string_view MutatorName(MutatorId id) {
  return id < kNumMutators ? kNames[id] : "invalid";
}

bool ApplyInPlace(MutatorId id, ByteArray &d, Rng &rng,
                  const ExtrasDict &extras, size_t max_len) {
  const size_t n = d.size();
  switch (id) {
    case kFlipBit: {
      if (n < 1) return Skip(id, rng);
      const size_t bit = R(rng, n * 8);
      d[bit >> 3] ^= static_cast<uint8_t>(0x80u >> (bit & 7));
      return true;
    }
    case kInterestingByte: {
      if (n < 1) return Skip(id, rng);
      const size_t pos = R(rng, n);
      d[pos] = static_cast<uint8_t>(kInteresting8[R(rng, kInteresting8.size())]);
      return true;
    }
    case kInterestingWord:
      return InterestingWide(id, d, rng, 2);
    case kInterestingDword:
      return InterestingWide(id, d, rng, 4);
    case kSubByte:
    case kAddByte: {
      if (n < 1) return Skip(id, rng);
      const size_t pos = R(rng, n);
      const uint8_t delta = static_cast<uint8_t>(1 + R(rng, kArithMax));
      d[pos] = static_cast<uint8_t>(id == kAddByte ? d[pos] + delta
                                                   : d[pos] - delta);
      return true;
    }
    case kSubWord:
    case kAddWord:
      return ArithWide(id, d, rng, 2, id == kAddWord);
    case kSubDword:
    case kAddDword:
      return ArithWide(id, d, rng, 4, id == kAddDword);
    case kRandomByte: {
      if (n < 1) return Skip(id, rng);
      const size_t pos = R(rng, n);
      d[pos] ^= static_cast<uint8_t>(1 + R(rng, 255));
      return true;
    }
    case kDeleteBytes:
    case kDeleteBytes2: {
      if (n < 1) return Skip(id, rng);
      const size_t len = 1 + R(rng, std::min<size_t>(n, kMaxBlockLen));
      const size_t pos = R(rng, n - len + 1);
      d.erase(d.begin() + pos, d.begin() + pos + len);
      return true;
    }
    case kCloneOrInsert: {
      const bool clone = R(rng, 4) != 0 && n >= 1;
      if (clone) {
        const size_t len = 1 + R(rng, std::min<size_t>(n, kMaxBlockLen));
        const size_t from = R(rng, n - len + 1);
        const size_t to = R(rng, n + 1);
        if (n + len > max_len) return false;
        ByteArray block(d.begin() + from, d.begin() + from + len);
        d.insert(d.begin() + to, block.begin(), block.end());
        return true;
      }
      const size_t len = 1 + R(rng, kMaxBlockLen);
      const size_t to = R(rng, n + 1);
      const uint8_t value = RepeatedByte(d, rng);
      if (n + len > max_len) return false;
      d.insert(d.begin() + to, len, value);
      return true;
    }
    case kOverwriteBlock: {
      if (n < 2) return Skip(id, rng);
      const bool copy = R(rng, 4) != 0;
      const size_t len = 1 + R(rng, std::min<size_t>(n - 1, kMaxBlockLen));
      const size_t from = R(rng, n - len + 1);
      const size_t to = R(rng, n - len + 1);
      if (copy) {
        if (from != to) std::memmove(d.data() + to, d.data() + from, len);
      } else {
        const uint8_t value = RepeatedByte(d, rng);
        std::fill_n(d.begin() + to, len, value);
      }
      return true;
    }
    case kOverwriteExtra: {
      if (extras.empty()) return Skip(id, rng);
      const ByteArray &extra = extras[R(rng, extras.size())];
      if (extra.size() > n) {
        rng.NextU64();
        return false;
      }
      const size_t pos = R(rng, n - extra.size() + 1);
      std::copy(extra.begin(), extra.end(), d.begin() + pos);
      return true;
    }
    case kInsertExtra: {
      if (extras.empty()) return Skip(id, rng);
      const ByteArray &extra = extras[R(rng, extras.size())];
      const size_t pos = R(rng, n + 1);
      if (n + extra.size() > max_len) return false;
      d.insert(d.begin() + pos, extra.begin(), extra.end());
      return true;
    }
    default:
      return false;
  }
}

Outcome Apply(MutatorId id, std::span<const uint8_t> input, Rng &rng,
              const ExtrasDict &extras, size_t max_len) {
  Outcome out;
  out.output.assign(input.begin(), input.end());
  out.applied = ApplyInPlace(id, out.output, rng, extras, max_len);
  return out;
}

size_t HavocInPlace(ByteArray &data, Rng &rng, Scheduler &scheduler,
                    const ExtrasDict &extras, size_t max_len,
                    std::vector<MutatorId> &used) {
  used.clear();
  const size_t stack = size_t{1} << (1 + rng.Below(7));
  for (size_t i = 0; i < stack; ++i) {
    const MutatorId id = scheduler.Select(rng);
    used.push_back(id);
    ApplyInPlace(id, data, rng, extras, max_len);
  }
  return stack;
}

HavocResult Havoc(std::span<const uint8_t> input, Rng &rng,
                  Scheduler &scheduler, const ExtrasDict &extras,
                  size_t max_len) {
  HavocResult result;
  result.output.assign(input.begin(), input.end());
  HavocInPlace(result.output, rng, scheduler, extras, max_len,
               result.mutations_used);
  return result;
}

std::optional<ByteArray> Splice(std::span<const uint8_t> a,
                                std::span<const uint8_t> b, Rng &rng) {
  if (a.size() < 2 || b.size() < 2) return std::nullopt;
  const size_t common = std::min(a.size(), b.size());
  std::optional<size_t> first, last;
  for (size_t i = 0; i < common; ++i) {
    if (a[i] == b[i]) continue;
    if (!first) first = i;
    last = i;
  }
  if (a.size() != b.size()) {
    if (!first) first = common;
    last = common;
  }
  if (!first || *last - *first <= 1) return std::nullopt;
  const size_t split = *first + 1 + rng.Below(static_cast<uint32_t>(*last - *first - 1));
  ByteArray out(a.begin(), a.begin() + split);
  out.insert(out.end(), b.begin() + split, b.end());
  return out;
}

namespace {

int HexDigit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

ExtrasDict ParseDictionary(std::string_view text) {
  ExtrasDict dict;
  size_t line_no = 0;
  while (!text.empty()) {
    const size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
      line.remove_suffix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front())))
      line.remove_prefix(1);
    if (line.empty() || line.front() == '#') continue;

    auto fail = [line_no](const std::string &why) {
      return StartupError("dictionary line " + std::to_string(line_no) + ": " + why);
    };
    const size_t open = line.find('"');
    if (open == std::string_view::npos || line.back() != '"' || open == line.size() - 1)
      throw fail("expected a quoted token");
    std::string_view body = line.substr(open + 1, line.size() - open - 2);
    ByteArray token;
    for (size_t i = 0; i < body.size(); ++i) {
      const char c = body[i];
      if (c != '\\') {
        token.push_back(static_cast<uint8_t>(c));
        continue;
      }
      if (++i >= body.size()) throw fail("dangling escape");
      if (body[i] == '\\' || body[i] == '"') {
        token.push_back(static_cast<uint8_t>(body[i]));
      } else if (body[i] == 'x' && i + 2 < body.size() &&
                 HexDigit(body[i + 1]) >= 0 && HexDigit(body[i + 2]) >= 0) {
        token.push_back(static_cast<uint8_t>(HexDigit(body[i + 1]) * 16 +
                                             HexDigit(body[i + 2])));
        i += 2;
      } else {
        throw fail("bad escape sequence");
      }
    }
    if (token.empty() || token.size() > kMaxExtraLen)
      throw fail("token length must be in [1, 32]");
    dict.push_back(std::move(token));
  }
  return dict;
}

ExtrasDict LoadDictionary(const std::filesystem::path &path) {
  const ByteArray raw = ReadFileBytes(path);
  return ParseDictionary(
      std::string_view(reinterpret_cast<const char *>(raw.data()), raw.size()));
}

}  // namespace darwinfuzz
