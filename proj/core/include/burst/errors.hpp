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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace burst {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A VM state edge outside the legal lifecycle. Programming error: abort the tick.
class IllegalTransition : public Error {
 public:
  IllegalTransition(std::string from, std::string to)
      : Error("illegal vm transition " + from + " -> " + to),
        from_(std::move(from)),
        to_(std::move(to)) {}

  const std::string& from() const { return from_; }
  const std::string& to() const { return to_; }

 private:
  std::string from_;
  std::string to_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line_no, const std::string& reason)
      : Error("line " + std::to_string(line_no) + ": " + reason), line_no_(line_no) {}

  std::size_t line_no() const { return line_no_; }

 private:
  std::size_t line_no_;
};

/// Accounting records must be ordered by nondecreasing submit time.
class OrderError : public Error {
 public:
  explicit OrderError(std::size_t line_no)
      : Error("line " + std::to_string(line_no) + ": submit_time out of order"),
        line_no_(line_no) {}

  std::size_t line_no() const { return line_no_; }

 private:
  std::size_t line_no_;
};

/// External command adapter failed (nonzero exit, timeout, spawn failure).
class AdapterError : public Error {
 public:
  AdapterError(int exit_code, std::string stderr_excerpt)
      : Error("adapter command failed (exit " + std::to_string(exit_code) + "): " +
              stderr_excerpt),
        exit_code_(exit_code),
        stderr_excerpt_(std::move(stderr_excerpt)) {}

  int exit_code() const { return exit_code_; }
  const std::string& stderr_excerpt() const { return stderr_excerpt_; }

 private:
  int exit_code_;
  std::string stderr_excerpt_;
};

/// VM request refused: the provider is at its configured cap. Retry next tick.
class CapReached : public Error {
 public:
  explicit CapReached(int max_vms)
      : Error("vm cap reached (max_vms=" + std::to_string(max_vms) + ")"), max_vms_(max_vms) {}

  int max_vms() const { return max_vms_; }

 private:
  int max_vms_;
};

/// VM request refused: too soon after the previous one. Retry next tick.
class StaggerViolation : public Error {
 public:
  explicit StaggerViolation(std::int64_t wait_s)
      : Error("launch stagger not elapsed, wait " + std::to_string(wait_s) + "s"),
        wait_s_(wait_s) {}

  std::int64_t wait_s() const { return wait_s_; }

 private:
  std::int64_t wait_s_;
};

/// Detach attempted on a node that still runs jobs; stop policy must only see idle VMs.
class BusyNode : public Error {
 public:
  explicit BusyNode(const std::string& node_id)
      : Error("node " + node_id + " still has running jobs") {}
};

class NonTermination : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class LockError : public Error {
 public:
  using Error::Error;
};

}  // namespace burst
