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
#include <string>

namespace burst {

struct CommandResult {
  int exit_code = -1;       // 128+signal if killed; -1 on spawn failure/timeout
  std::string out;
  std::string err;
  bool timed_out = false;
};

/// Runs `sh -c <command>` with stdout/stderr captured, killing the process
/// group after timeout_s seconds. Blocking; the orchestrator tick serializes
/// all adapter calls.
CommandResult run_command(const std::string& command, std::int64_t timeout_s);

/// Adapter execution bound from BURSTD_POLL_TIMEOUT_S (default 30).
/// Throws ConfigError if the variable is set but not a positive integer.
std::int64_t poll_timeout_from_env();

}  // namespace burst
