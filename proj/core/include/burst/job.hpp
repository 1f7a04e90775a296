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

#include <optional>
#include <string>
#include <string_view>

#include "burst/time.hpp"

namespace burst {

/// Forward only: PENDING -> RUNNING -> FINISHED.
enum class JobState { Pending, Running, Finished };

const char* to_string(JobState s);
std::optional<JobState> job_state_from(std::string_view name);

/// One batch job as seen by the orchestrator.
///
/// state == Running iff assigned_node is set. duration_s is only known when
/// the job comes from a replayed or synthetic trace.
struct Job {
  std::string id;
  Timestamp submit_time = 0;
  std::optional<std::int64_t> duration_s;
  std::string queue;
  JobState state = JobState::Pending;
  std::optional<std::string> assigned_node;
  bool is_candidate = false;
};

}  // namespace burst
