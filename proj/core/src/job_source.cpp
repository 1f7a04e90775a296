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

#include "burst/job_source.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

#include "burst/errors.hpp"
#include "burst/subprocess.hpp"

namespace burst {

ReplayJobSource::ReplayJobSource(std::vector<AccountingRecord> trace)
    : trace_(std::move(trace)) {
  for (std::size_t i = 1; i < trace_.size(); ++i) {
    if (trace_[i].submit_time < trace_[i - 1].submit_time) {
      throw OrderError(i + 1);
    }
  }
  for (const auto& rec : trace_) {
    if (!states_.emplace(rec.job_id, JobState::Pending).second) {
      throw Error("duplicate job_id '" + rec.job_id + "' in trace");
    }
  }
}

QueueSnapshot ReplayJobSource::poll(Timestamp now) {
  QueueSnapshot snap;
  snap.at = now;
  for (const auto& rec : trace_) {
    if (rec.submit_time > now) {
      break;  // trace is sorted; nothing later is submitted yet
    }
    JobState state = states_.at(rec.job_id);
    if (state == JobState::Finished) {
      continue;
    }
    Job job;
    job.id = rec.job_id;
    job.submit_time = rec.submit_time;
    job.duration_s = rec.duration_s;
    job.queue = rec.queue;
    job.state = state;
    snap.jobs.push_back(std::move(job));
  }
  return snap;
}

void ReplayJobSource::mark_running(const std::string& job_id) {
  states_.at(job_id) = JobState::Running;
}

void ReplayJobSource::mark_finished(const std::string& job_id) {
  auto& state = states_.at(job_id);
  if (state != JobState::Finished) {
    state = JobState::Finished;
    ++finished_count_;
  }
}

bool ReplayJobSource::all_delivered(Timestamp now) const {
  return trace_.empty() || now >= trace_.back().submit_time;
}

Timestamp ReplayJobSource::last_submit_time() const {
  return trace_.empty() ? 0 : trace_.back().submit_time;
}

std::vector<Job> parse_adapter_jobs(std::string_view text) {
  std::vector<Job> jobs;
  std::unordered_set<std::string> ids;
  std::size_t line_no = 0;
  std::size_t start = 0;

  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    std::string_view line =
        text.substr(start, nl == std::string_view::npos ? text.size() - start : nl - start);
    start = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;

    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    if (line.empty()) {
      continue;
    }

    std::vector<std::string_view> fields;
    std::size_t fs = 0;
    while (true) {
      auto pos = line.find('|', fs);
      if (pos == std::string_view::npos) {
        fields.push_back(line.substr(fs));
        break;
      }
      fields.push_back(line.substr(fs, pos - fs));
      fs = pos + 1;
    }
    if (fields.size() != 4) {
      throw ParseError(line_no, "expected <job_id>|<state>|<queue>|<submit_epoch>");
    }

    Job job;
    job.id = std::string(fields[0]);
    if (job.id.empty()) {
      throw ParseError(line_no, "empty job_id");
    }
    auto state = job_state_from(fields[1]);
    if (!state || *state == JobState::Finished) {
      throw ParseError(line_no, "state must be PENDING or RUNNING");
    }
    job.state = *state;
    job.queue = std::string(fields[2]);
    std::int64_t submit = 0;
    auto sv = fields[3];
    auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), submit);
    if (ec != std::errc{} || ptr != sv.data() + sv.size()) {
      throw ParseError(line_no, "submit_epoch is not an integer");
    }
    job.submit_time = submit;
    if (!ids.insert(job.id).second) {
      throw ParseError(line_no, "duplicate job_id '" + job.id + "'");
    }
    jobs.push_back(std::move(job));
  }
  return jobs;
}

CommandJobSource::CommandJobSource(std::string poll_cmd)
    : CommandJobSource(std::move(poll_cmd), poll_timeout_from_env()) {}

CommandJobSource::CommandJobSource(std::string poll_cmd, std::int64_t timeout_s)
    : poll_cmd_(std::move(poll_cmd)), timeout_s_(timeout_s) {}

QueueSnapshot CommandJobSource::poll(Timestamp now) {
  CommandResult res = run_command(poll_cmd_, timeout_s_);
  if (res.timed_out) {
    throw AdapterError(res.exit_code,
                       "poll command timed out after " + std::to_string(timeout_s_) + "s");
  }
  if (res.exit_code != 0) {
    throw AdapterError(res.exit_code, res.err.substr(0, 200));
  }
  QueueSnapshot snap;
  snap.at = now;
  snap.jobs = parse_adapter_jobs(res.out);
  return snap;
}

}  // namespace burst
