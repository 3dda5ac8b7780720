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

#include "darwinfuzz/executor.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <stdlib.h>
#include <sys/syscall.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <iostream>

#include "darwinfuzz/common.h"
#include "darwinfuzz/corpus.h"

namespace darwinfuzz {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

std::string_view ExecStatusName(ExecStatus status) {
  switch (status) {
    case ExecStatus::kOk:
      return "ok";
    case ExecStatus::kCrash:
      return "crash";
    case ExecStatus::kHang:
      return "hang";
  }
  return "unknown";
}

ExecStatus RunMagicParse(std::span<const uint8_t> in, RawMap &map) {
  map.Hit(0);
  if (in.size() < 4) return ExecStatus::kOk;
  map.Hit(1);
  if (!std::equal(kMagicParseHeader.begin(), kMagicParseHeader.end(), in.begin()))
    return ExecStatus::kOk;
  map.Hit(2);
  if (in.size() < 6) return ExecStatus::kOk;
  map.Hit(3);
  const size_t declared = (size_t{in[4]} << 8) | in[5];
  const size_t payload_len = in.size() - 6;
  if (declared != payload_len) return ExecStatus::kOk;
  map.Hit(4);
  if (payload_len < 1) return ExecStatus::kOk;
  const auto payload = in.subspan(6);
  uint8_t x = 0;
  bool marker = false;
  for (uint8_t b : payload) {
    map.Hit(5);
    x ^= b;
    marker |= b == kMagicParseMarker;
  }
  if (x != 0) return ExecStatus::kOk;
  map.Hit(6);
  if (marker) map.Hit(7);
  if (payload.size() >= kMagicParseCrashPrefix.size() &&
      std::equal(kMagicParseCrashPrefix.begin(), kMagicParseCrashPrefix.end(),
                 payload.begin())) {
    return ExecStatus::kCrash;
  }
  return ExecStatus::kOk;
}

ExecStatus RunBitmaze(std::span<const uint8_t> in, RawMap &map) {
  if (in.size() < 4) return ExecStatus::kOk;
  const uint32_t word = uint32_t{in[0]} | (uint32_t{in[1]} << 8) |
                        (uint32_t{in[2]} << 16) | (uint32_t{in[3]} << 24);
  const uint32_t diff = word ^ kBitmazePattern;
  map.Hit(0);
  for (size_t k = 1; k < kBitmazeEdges; ++k) {
    if ((diff >> (k - 1)) & 1u) break;
    map.Hit(k);
  }
  return ExecStatus::kOk;
}

ExecStatus RunNull(std::span<const uint8_t>, RawMap &) { return ExecStatus::kOk; }

namespace {

using BuiltinFn = ExecStatus (*)(std::span<const uint8_t>, RawMap &);

BuiltinFn FindBuiltin(std::string_view name) {
  if (name == "magicparse") return RunMagicParse;
  if (name == "bitmaze") return RunBitmaze;
  if (name == "null") return RunNull;
  return nullptr;
}

class BuiltinTarget final : public Target {
 public:
  BuiltinTarget(std::string name, BuiltinFn fn) : name_(std::move(name)), fn_(fn) {}

  ExecResult Run(std::span<const uint8_t> input, RawMap &map) override {
    const auto start = Clock::now();
    map.Clear();
    ExecResult result;
    result.status = fn_(input, map);
    result.duration =
        std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
    return result;
  }
  std::string name() const override { return "builtin:" + name_; }

 private:
  std::string name_;
  BuiltinFn fn_;
};

size_t CountPlaceholders(const std::vector<std::string> &argv) {
  size_t count = 0;
  for (const auto &arg : argv) {
    for (size_t pos = arg.find(kInputPlaceholder); pos != std::string::npos;
         pos = arg.find(kInputPlaceholder, pos + kInputPlaceholder.size())) {
      ++count;
    }
  }
  return count;
}

class ExternalProcessTarget final : public Target {
 public:
  explicit ExternalProcessTarget(const TargetSpec &spec) : timeout_(spec.timeout) {
    char tmpl[] = "/tmp/darwinfuzz.XXXXXX";
    if (!mkdtemp(tmpl)) throw StartupError("cannot create temp directory");
    work_dir_ = tmpl;
    input_path_ = work_dir_ / "input";
    map_path_ = work_dir_ / "coverage.map";
    for (std::string arg : spec.argv) {
      if (auto pos = arg.find(kInputPlaceholder); pos != std::string::npos)
        arg.replace(pos, kInputPlaceholder.size(), input_path_.string());
      argv_.push_back(std::move(arg));
    }
  }

  ExternalProcessTarget(const ExternalProcessTarget &) = delete;
  ExternalProcessTarget &operator=(const ExternalProcessTarget &) = delete;

  ~ExternalProcessTarget() override {
    std::error_code ec;
    fs::remove_all(work_dir_, ec);
  }

  ExecResult Run(std::span<const uint8_t> input, RawMap &map) override;
  std::string name() const override { return "exec:" + argv_.front(); }

 private:
  void ReadMap(RawMap &map);
  bool WaitWithTimeout(pid_t pid, int &wstatus);

  std::chrono::milliseconds timeout_;
  fs::path work_dir_;
  fs::path input_path_;
  fs::path map_path_;
  std::vector<std::string> argv_;
  uint64_t protocol_warnings_ = 0;
};

ExecResult ExternalProcessTarget::Run(std::span<const uint8_t> input, RawMap &map) {
  WriteFileBytes(input_path_, input);
  std::error_code ec;
  fs::remove(map_path_, ec);

  int err_pipe[2];
  if (pipe2(err_pipe, O_CLOEXEC) != 0) throw StartupError("pipe2 failed");

  std::vector<char *> cargv;
  for (auto &arg : argv_) cargv.push_back(arg.data());
  cargv.push_back(nullptr);
  const std::string env_value = map_path_.string();

  const auto start = Clock::now();
  const pid_t pid = fork();
  if (pid < 0) throw StartupError("fork failed");
  if (pid == 0) {
    setpgid(0, 0);
    close(err_pipe[0]);
    const int devnull = open("/dev/null", O_RDWR);
    if (devnull >= 0) {
      dup2(devnull, STDIN_FILENO);
      dup2(devnull, STDOUT_FILENO);
      dup2(devnull, STDERR_FILENO);
    }
    setenv(kCoverageEnvVar, env_value.c_str(), 1);
    execvp(cargv[0], cargv.data());
    const int e = errno;
    (void)!write(err_pipe[1], &e, sizeof(e));
    _exit(127);
  }
  close(err_pipe[1]);
  int exec_errno = 0;
  const ssize_t got = read(err_pipe[0], &exec_errno, sizeof(exec_errno));
  close(err_pipe[0]);
  if (got == sizeof(exec_errno)) {
    int ignored;
    waitpid(pid, &ignored, 0);
    throw StartupError("cannot launch target '" + argv_.front() +
                       "': " + std::strerror(exec_errno));
  }

  ExecResult result;
  int wstatus = 0;
  if (!WaitWithTimeout(pid, wstatus)) {
    kill(-pid, SIGKILL);
    kill(pid, SIGKILL);
    waitpid(pid, &wstatus, 0);
    result.status = ExecStatus::kHang;
  } else if (WIFSIGNALED(wstatus)) {
    result.status = ExecStatus::kCrash;
  }
  result.duration =
      std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
  ReadMap(map);
  return result;
}

bool ExternalProcessTarget::WaitWithTimeout(pid_t pid, int &wstatus) {
  const auto deadline = Clock::now() + timeout_;
  const int pidfd = static_cast<int>(syscall(SYS_pidfd_open, pid, 0));
  while (true) {
    const pid_t r = waitpid(pid, &wstatus, WNOHANG);
    if (r == pid) {
      if (pidfd >= 0) close(pidfd);
      return true;
    }
    const auto now = Clock::now();
    if (now >= deadline) break;
    const auto left =
        std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now).count();
    if (pidfd >= 0) {
      pollfd pfd{pidfd, POLLIN, 0};
      poll(&pfd, 1, static_cast<int>(std::max<long long>(left, 1)));
    } else {
      usleep(200);
    }
  }
  if (pidfd >= 0) close(pidfd);
  return false;
}

void ExternalProcessTarget::ReadMap(RawMap &map) {
  map.Clear();
  std::ifstream in(map_path_, std::ios::binary);
  if (in) {
    in.read(reinterpret_cast<char *>(map.counts.data()), kMapSize);
    if (in.gcount() == static_cast<std::streamsize>(kMapSize)) return;
    map.Clear();
  }
  if (protocol_warnings_++ < 5) {
    std::cerr << "warning: target did not write a " << kMapSize
              << "-byte coverage map to $" << kCoverageEnvVar
              << "; treating as empty\n";
  }
}

}  // namespace

TargetSpec ParseBuiltinTarget(std::string_view spec) {
  constexpr std::string_view kPrefix = "builtin:";
  if (!spec.starts_with(kPrefix) || !FindBuiltin(spec.substr(kPrefix.size()))) {
    throw UsageError("--target: expected builtin:magicparse|bitmaze|null or exec, got '" +
                     std::string(spec) + "'");
  }
  TargetSpec t;
  t.kind = TargetSpec::Kind::kBuiltin;
  t.builtin = std::string(spec.substr(kPrefix.size()));
  return t;
}

TargetSpec ExternalTarget(std::vector<std::string> argv,
                          std::chrono::milliseconds timeout) {
  TargetSpec t;
  t.kind = TargetSpec::Kind::kExternal;
  t.argv = std::move(argv);
  t.timeout = timeout;
  return t;
}

std::unique_ptr<Target> MakeTarget(const TargetSpec &spec) {
  if (spec.kind == TargetSpec::Kind::kBuiltin) {
    BuiltinFn fn = FindBuiltin(spec.builtin);
    if (!fn) throw StartupError("unknown builtin target: " + spec.builtin);
    return std::make_unique<BuiltinTarget>(spec.builtin, fn);
  }
  if (spec.argv.empty()) throw StartupError("external target: empty command");
  if (CountPlaceholders(spec.argv) != 1) {
    throw StartupError("external target: command must contain '@@' exactly once");
  }
  if (spec.timeout.count() <= 0) throw StartupError("timeout must be positive");
  return std::make_unique<ExternalProcessTarget>(spec);
}

}  // namespace darwinfuzz
