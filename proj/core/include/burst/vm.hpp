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

/// Cloud node lifecycle. Legal edges:
///   REQUESTED -> STARTING -> UP -> DRAINING -> STOPPED
///   REQUESTED -> FAILED, STARTING -> FAILED
/// STOPPED and FAILED are terminal; a failed VM is replaced, never revived.
enum class VmState { Requested, Starting, Up, Draining, Stopped, Failed };

const char* to_string(VmState s);
std::optional<VmState> vm_state_from(std::string_view name);

/// One cloud node under management.
///
/// idle_since is set iff state == Up and running_jobs == 0; it feeds the
/// idle-timeout stop policy. Billing accrues from requested_at.
struct VmInstance {
  std::string id;
  VmState state = VmState::Requested;
  Timestamp requested_at = 0;
  std::optional<Timestamp> up_at;
  std::optional<Timestamp> idle_since;
  int running_jobs = 0;
  int billed_increments = 0;
  std::string provider_handle;
};

bool is_legal_vm_transition(VmState from, VmState to);

/// True for states that occupy a provider slot (count toward max_vms).
bool vm_is_live(VmState s);

/// Applies one legal edge at time `at`. Entry to Up records up_at and, with no
/// running jobs, starts the idle clock; leaving Up clears it.
/// Throws IllegalTransition for any other edge, Error if `at` precedes a
/// timestamp already recorded on the instance.
VmInstance transition_vm(VmInstance vm, VmState to, Timestamp at);

/// Walks the (unique) legal path from vm.state to `to`, applying every edge at
/// time `at`. Used when a poll observes a VM several edges ahead.
VmInstance advance_vm(VmInstance vm, VmState to, Timestamp at);

/// now - idle_since when the idle clock runs, else 0. A busy VM is never idle.
std::int64_t vm_idle_seconds(const VmInstance& vm, Timestamp now);

/// Bookkeeping for the dispatcher: keeps running_jobs and the idle clock in sync.
void vm_begin_job(VmInstance& vm, Timestamp now);
void vm_end_job(VmInstance& vm, Timestamp now);

}  // namespace burst
