/*
 * Copyright 2026 The burstd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "burst/subprocess.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <cstring>

#include "burst/errors.hpp"

namespace burst {

namespace {

void close_fd(int& fd) {
  if (fd >= 0) {
    ::close(fd);
    fd = -1;
  }
}

std::int64_t now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace

CommandResult run_command(const std::string& command, std::int64_t timeout_s) {
  CommandResult result;

  int out_pipe[2] = {-1, -1};
  int err_pipe[2] = {-1, -1};
  if (::pipe(out_pipe) != 0 || ::pipe(err_pipe) != 0) {
    close_fd(out_pipe[0]);
    close_fd(out_pipe[1]);
    result.err = "pipe failed";
    return result;
  }

  pid_t pid = ::fork();
  if (pid < 0) {
    close_fd(out_pipe[0]);
    close_fd(out_pipe[1]);
    close_fd(err_pipe[0]);
    close_fd(err_pipe[1]);
    result.err = "fork failed";
    return result;
  }

  if (pid == 0) {
    // Own process group, so a timeout kill reaps the whole pipeline.
    ::setpgid(0, 0);
    ::dup2(out_pipe[1], STDOUT_FILENO);
    ::dup2(err_pipe[1], STDERR_FILENO);
    close_fd(out_pipe[0]);
    close_fd(out_pipe[1]);
    close_fd(err_pipe[0]);
    close_fd(err_pipe[1]);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }

  close_fd(out_pipe[1]);
  close_fd(err_pipe[1]);

  const std::int64_t deadline = now_ms() + timeout_s * 1000;
  struct Stream {
    int fd;
    std::string* sink;
  } streams[2] = {{out_pipe[0], &result.out}, {err_pipe[0], &result.err}};
  int open_streams = 2;
  char buf[4096];

  while (open_streams > 0) {
    struct pollfd fds[2];
    int n = 0;
    for (auto& s : streams) {
      if (s.fd >= 0) {
        fds[n].fd = s.fd;
        fds[n].events = POLLIN;
        fds[n].revents = 0;
        ++n;
      }
    }
    std::int64_t remaining = deadline - now_ms();
    if (remaining <= 0) {
      result.timed_out = true;
      break;
    }
    int rc = ::poll(fds, static_cast<nfds_t>(n), static_cast<int>(remaining));
    if (rc < 0) {
      if (errno == EINTR) {
        continue;
      }
      break;
    }
    if (rc == 0) {
      result.timed_out = true;
      break;
    }
    for (int i = 0; i < n; ++i) {
      if ((fds[i].revents & (POLLIN | POLLHUP | POLLERR)) == 0) {
        continue;
      }
      for (auto& s : streams) {
        if (s.fd != fds[i].fd) {
          continue;
        }
        ssize_t got = ::read(s.fd, buf, sizeof buf);
        if (got > 0) {
          s.sink->append(buf, static_cast<std::size_t>(got));
        } else if (got == 0 || (got < 0 && errno != EINTR && errno != EAGAIN)) {
          close_fd(s.fd);
          --open_streams;
        }
      }
    }
  }

  if (result.timed_out) {
    ::kill(-pid, SIGKILL);
  }
  close_fd(streams[0].fd);
  close_fd(streams[1].fd);

  int status = 0;
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  if (result.timed_out) {
    result.exit_code = -1;
  } else if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  } else if (WIFSIGNALED(status)) {
    result.exit_code = 128 + WTERMSIG(status);
  }
  return result;
}

std::int64_t poll_timeout_from_env() {
  const char* raw = std::getenv("BURSTD_POLL_TIMEOUT_S");
  if (raw == nullptr || *raw == '\0') {
    return 30;
  }
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v <= 0) {
    throw ConfigError("BURSTD_POLL_TIMEOUT_S must be a positive integer");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace burst
