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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burst/time.hpp"

namespace burst {

enum class EventKind {
  VmStartRequested,
  VmUp,
  VmAttached,
  VmDrain,
  VmStop,
  VmFailed,
  JobDispatched,
  JobFinished,
};

const char* to_string(EventKind k);
std::optional<EventKind> event_kind_from(std::string_view name);

/// One orchestration decision. Logs are ordered by `at`, ties broken by `seq`.
struct DecisionEvent {
  Timestamp at = 0;
  std::uint64_t seq = 0;
  EventKind kind = EventKind::VmStartRequested;
  std::string subject_id;
  std::string detail;
};

/// Wire format: `<epoch-seconds> <seq> <KIND> <subject_id> <detail>`,
/// single-space separators, detail may itself contain spaces.
std::string format_event(const DecisionEvent& e);
DecisionEvent parse_event_line(std::string_view line, std::size_t line_no = 0);

/// Append-only decision log. When a sink stream is attached every event is
/// written and flushed as it is appended (the live daemon's crash trail).
class DecisionLog {
 public:
  const DecisionEvent& append(Timestamp at, EventKind kind, std::string subject_id,
                              std::string detail);

  const std::vector<DecisionEvent>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }
  std::uint64_t next_seq() const { return next_seq_; }

  void attach_sink(std::ostream* sink) { sink_ = sink; }

 private:
  std::vector<DecisionEvent> events_;
  std::uint64_t next_seq_ = 0;
  std::ostream* sink_ = nullptr;
};

}  // namespace burst
