// Copyright 2026 The CBAN Authors
// SPDX-License-Identifier: Apache-2.0
#include "cban/core/subprocess.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstring>
#include <thread>

#include "cban/core/errors.hpp"

namespace cban {

namespace {

std::vector<char*> to_argv(const std::vector<std::string>& argv) {
  std::vector<char*> out;
  out.reserve(argv.size() + 1);
  for (const auto& a : argv) out.push_back(const_cast<char*>(a.c_str()));
  out.push_back(nullptr);
  return out;
}

int wait_exit_code(pid_t pid) {
  int status = 0;
  while (waitpid(pid, &status, 0) < 0) {
    if (errno != EINTR) return -1;
  }
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  if (WIFSIGNALED(status)) return 128 + WTERMSIG(status);
  return -1;
}

}  // namespace

RunResult run_process(const std::vector<std::string>& argv,
                      const std::optional<std::filesystem::path>& cwd,
                      int timeout_ms) {
  if (argv.empty()) {
    throw Error(Errc::usage_error, "empty argv");
  }
  int out_pipe[2];
  int err_pipe[2];
  if (pipe(out_pipe) != 0 || pipe(err_pipe) != 0) {
    throw Error(Errc::io_error, "pipe failed");
  }

  pid_t pid = fork();
  if (pid < 0) {
    throw Error(Errc::io_error, "fork failed");
  }
  if (pid == 0) {
    setpgid(0, 0);
    if (cwd && chdir(cwd->c_str()) != 0) _exit(126);
    int devnull = open("/dev/null", O_RDONLY);
    if (devnull >= 0) dup2(devnull, STDIN_FILENO);
    dup2(out_pipe[1], STDOUT_FILENO);
    dup2(err_pipe[1], STDERR_FILENO);
    close(out_pipe[0]);
    close(out_pipe[1]);
    close(err_pipe[0]);
    close(err_pipe[1]);
    auto cargv = to_argv(argv);
    execvp(cargv[0], cargv.data());
    _exit(127);
  }

  close(out_pipe[1]);
  close(err_pipe[1]);
  fcntl(out_pipe[0], F_SETFL, O_NONBLOCK);
  fcntl(err_pipe[0], F_SETFL, O_NONBLOCK);

  RunResult result;
  auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);
  bool out_open = true;
  bool err_open = true;
  char buf[16 * 1024];

  while (out_open || err_open) {
    auto now = std::chrono::steady_clock::now();
    if (now >= deadline) {
      result.timed_out = true;
      kill(-pid, SIGKILL);
      kill(pid, SIGKILL);
      break;
    }
    struct pollfd fds[2];
    nfds_t nfds = 0;
    if (out_open) fds[nfds++] = {out_pipe[0], POLLIN, 0};
    if (err_open) fds[nfds++] = {err_pipe[0], POLLIN, 0};
    int wait_ms = static_cast<int>(
        std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now).count());
    if (poll(fds, nfds, std::min(wait_ms, 200)) < 0 && errno != EINTR) break;

    auto drain = [&](int fd, std::string& sink, bool& open_flag) {
      while (true) {
        ssize_t n = read(fd, buf, sizeof(buf));
        if (n > 0) {
          sink.append(buf, static_cast<std::size_t>(n));
        } else if (n == 0) {
          open_flag = false;
          break;
        } else {
          break;  // EAGAIN or EINTR
        }
      }
    };
    if (out_open) drain(out_pipe[0], result.out, out_open);
    if (err_open) drain(err_pipe[0], result.err, err_open);
  }

  close(out_pipe[0]);
  close(err_pipe[0]);
  result.exit_code = wait_exit_code(pid);
  return result;
}

ChildProcess::ChildProcess(const std::vector<std::string>& argv,
                           const std::optional<std::filesystem::path>& cwd) {
  if (argv.empty()) {
    throw Error(Errc::usage_error, "empty argv");
  }
  pid_ = fork();
  if (pid_ < 0) {
    throw Error(Errc::io_error, "fork failed");
  }
  if (pid_ == 0) {
    setpgid(0, 0);
    if (cwd && chdir(cwd->c_str()) != 0) _exit(126);
    auto cargv = to_argv(argv);
    execvp(cargv[0], cargv.data());
    _exit(127);
  }
}

ChildProcess::~ChildProcess() { stop(); }

bool ChildProcess::running() const {
  if (pid_ <= 0) return false;
  return kill(pid_, 0) == 0;
}

void ChildProcess::stop() {
  if (pid_ <= 0) return;
  kill(pid_, SIGTERM);
  for (int i = 0; i < 30; ++i) {
    int status = 0;
    pid_t r = waitpid(pid_, &status, WNOHANG);
    if (r == pid_ || (r < 0 && errno == ECHILD)) {
      pid_ = -1;
      return;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(100));
  }
  kill(pid_, SIGKILL);
  waitpid(pid_, nullptr, 0);
  pid_ = -1;
}

}  // namespace cban
