// Copyright 2026 The CBAN Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <sys/types.h>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace cban {

struct RunResult {
  int exit_code = -1;  // 128+signal when killed
  bool timed_out = false;
  std::string out;
  std::string err;
};

// Runs argv to completion capturing both streams. On timeout the whole
// process group is killed and timed_out is set.
RunResult run_process(const std::vector<std::string>& argv,
                      const std::optional<std::filesystem::path>& cwd,
                      int timeout_ms);

// Long-lived child (a server under test). Streams are inherited.
class ChildProcess {
 public:
  ChildProcess(const std::vector<std::string>& argv,
               const std::optional<std::filesystem::path>& cwd = std::nullopt);
  ~ChildProcess();
  ChildProcess(const ChildProcess&) = delete;
  ChildProcess& operator=(const ChildProcess&) = delete;

  pid_t pid() const { return pid_; }
  bool running() const;
  void stop();  // SIGTERM, then SIGKILL after a grace period

 private:
  pid_t pid_ = -1;
};

}  // namespace cban
