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

#include "burst/events.hpp"

#include <charconv>
#include <ostream>

#include <fmt/format.h>

#include "burst/errors.hpp"

namespace burst {

const char* to_string(EventKind k) {
  switch (k) {
    case EventKind::VmStartRequested: return "VM_START_REQUESTED";
    case EventKind::VmUp: return "VM_UP";
    case EventKind::VmAttached: return "VM_ATTACHED";
    case EventKind::VmDrain: return "VM_DRAIN";
    case EventKind::VmStop: return "VM_STOP";
    case EventKind::VmFailed: return "VM_FAILED";
    case EventKind::JobDispatched: return "JOB_DISPATCHED";
    case EventKind::JobFinished: return "JOB_FINISHED";
  }
  return "?";
}

std::optional<EventKind> event_kind_from(std::string_view name) {
  if (name == "VM_START_REQUESTED") return EventKind::VmStartRequested;
  if (name == "VM_UP") return EventKind::VmUp;
  if (name == "VM_ATTACHED") return EventKind::VmAttached;
  if (name == "VM_DRAIN") return EventKind::VmDrain;
  if (name == "VM_STOP") return EventKind::VmStop;
  if (name == "VM_FAILED") return EventKind::VmFailed;
  if (name == "JOB_DISPATCHED") return EventKind::JobDispatched;
  if (name == "JOB_FINISHED") return EventKind::JobFinished;
  return std::nullopt;
}

std::string format_event(const DecisionEvent& e) {
  return fmt::format("{} {} {} {} {}", e.at, e.seq, to_string(e.kind), e.subject_id, e.detail);
}

namespace {

std::string_view take_field(std::string_view& rest, std::size_t line_no) {
  auto pos = rest.find(' ');
  if (pos == std::string_view::npos) {
    throw ParseError(line_no, "truncated event line");
  }
  auto field = rest.substr(0, pos);
  rest.remove_prefix(pos + 1);
  return field;
}

template <typename Int>
Int parse_int(std::string_view text, std::size_t line_no, const char* what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError(line_no, std::string("bad ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

DecisionEvent parse_event_line(std::string_view line, std::size_t line_no) {
  std::string_view rest = line;
  DecisionEvent e;
  e.at = parse_int<Timestamp>(take_field(rest, line_no), line_no, "timestamp");
  e.seq = parse_int<std::uint64_t>(take_field(rest, line_no), line_no, "sequence");
  auto kind = event_kind_from(take_field(rest, line_no));
  if (!kind) {
    throw ParseError(line_no, "unknown event kind");
  }
  e.kind = *kind;
  auto pos = rest.find(' ');
  if (pos == std::string_view::npos) {
    throw ParseError(line_no, "truncated event line");
  }
  e.subject_id = std::string(rest.substr(0, pos));
  e.detail = std::string(rest.substr(pos + 1));
  return e;
}

const DecisionEvent& DecisionLog::append(Timestamp at, EventKind kind, std::string subject_id,
                                         std::string detail) {
  if (!events_.empty() && at < events_.back().at) {
    throw Error("decision log timestamps must be nondecreasing");
  }
  events_.push_back(DecisionEvent{at, next_seq_++, kind, std::move(subject_id),
                                  std::move(detail)});
  if (sink_ != nullptr) {
    *sink_ << format_event(events_.back()) << '\n';
    sink_->flush();
  }
  return events_.back();
}

}  // namespace burst
