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

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "burst/accounting.hpp"
#include "burst/job.hpp"
#include "burst/time.hpp"

namespace burst {

/// The queue as observed at one instant: PENDING and RUNNING jobs only,
/// unique job ids.
struct QueueSnapshot {
  Timestamp at = 0;
  std::vector<Job> jobs;
};

/// A stream of job snapshots. Exactly one orchestrator polls a given source;
/// polls never run concurrently.
class JobSource {
 public:
  virtual ~JobSource() = default;

  /// Throws AdapterError / ParseError on adapter trouble (the tick is aborted).
  virtual QueueSnapshot poll(Timestamp now) = 0;
};

/// Replays an accounting trace (historical or synthetic): at time `now` every
/// record with submit_time <= now that has not been reported finished is in
/// the snapshot. The simulator's cluster model reports dispatch/finish back
/// via mark_running/mark_finished.
class ReplayJobSource final : public JobSource {
 public:
  explicit ReplayJobSource(std::vector<AccountingRecord> trace);

  QueueSnapshot poll(Timestamp now) override;

  void mark_running(const std::string& job_id);
  void mark_finished(const std::string& job_id);

  bool all_delivered(Timestamp now) const;
  std::size_t total_jobs() const { return trace_.size(); }
  std::size_t finished_jobs() const { return finished_count_; }
  Timestamp last_submit_time() const;

 private:
  std::vector<AccountingRecord> trace_;  // sorted by submit_time
  std::unordered_map<std::string, JobState> states_;
  std::size_t finished_count_ = 0;
};

/// Adapter for a live batch system: runs a configured poll command and parses
/// its stdout, one job per line:
///   <job_id>|<PENDING|RUNNING>|<queue>|<submit_epoch>
/// Pipe-separated, no escaping (job ids must not contain '|'). Execution is
/// bounded by BURSTD_POLL_TIMEOUT_S (default 30).
class CommandJobSource final : public JobSource {
 public:
  explicit CommandJobSource(std::string poll_cmd);
  CommandJobSource(std::string poll_cmd, std::int64_t timeout_s);

  QueueSnapshot poll(Timestamp now) override;

 private:
  std::string poll_cmd_;
  std::int64_t timeout_s_;
};

/// Parses the adapter wire format above; exposed for tests and alternative
/// transports.
std::vector<Job> parse_adapter_jobs(std::string_view text);

}  // namespace burst
