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

#include "burst/job.hpp"

namespace burst {

const char* to_string(JobState s) {
  switch (s) {
    case JobState::Pending: return "PENDING";
    case JobState::Running: return "RUNNING";
    case JobState::Finished: return "FINISHED";
  }
  return "?";
}

std::optional<JobState> job_state_from(std::string_view name) {
  if (name == "PENDING") return JobState::Pending;
  if (name == "RUNNING") return JobState::Running;
  if (name == "FINISHED") return JobState::Finished;
  return std::nullopt;
}

}  // namespace burst
