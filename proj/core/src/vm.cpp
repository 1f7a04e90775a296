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

#include "burst/vm.hpp"

#include "burst/errors.hpp"

namespace burst {

const char* to_string(VmState s) {
  switch (s) {
    case VmState::Requested: return "REQUESTED";
    case VmState::Starting: return "STARTING";
    case VmState::Up: return "UP";
    case VmState::Draining: return "DRAINING";
    case VmState::Stopped: return "STOPPED";
    case VmState::Failed: return "FAILED";
  }
  return "?";
}

std::optional<VmState> vm_state_from(std::string_view name) {
  if (name == "REQUESTED") return VmState::Requested;
  if (name == "STARTING") return VmState::Starting;
  if (name == "UP") return VmState::Up;
  if (name == "DRAINING") return VmState::Draining;
  if (name == "STOPPED") return VmState::Stopped;
  if (name == "FAILED") return VmState::Failed;
  return std::nullopt;
}

bool is_legal_vm_transition(VmState from, VmState to) {
  switch (from) {
    case VmState::Requested:
      return to == VmState::Starting || to == VmState::Failed;
    case VmState::Starting:
      return to == VmState::Up || to == VmState::Failed;
    case VmState::Up:
      return to == VmState::Draining;
    case VmState::Draining:
      return to == VmState::Stopped;
    case VmState::Stopped:
    case VmState::Failed:
      return false;
  }
  return false;
}

bool vm_is_live(VmState s) {
  return s == VmState::Requested || s == VmState::Starting || s == VmState::Up ||
         s == VmState::Draining;
}

VmInstance transition_vm(VmInstance vm, VmState to, Timestamp at) {
  if (!is_legal_vm_transition(vm.state, to)) {
    throw IllegalTransition(to_string(vm.state), to_string(to));
  }
  if (at < vm.requested_at || (vm.up_at && at < *vm.up_at) ||
      (vm.idle_since && at < *vm.idle_since)) {
    throw Error("vm " + vm.id + ": transition timestamp moves backwards");
  }
  vm.state = to;
  if (to == VmState::Up) {
    vm.up_at = at;
    if (vm.running_jobs == 0) {
      vm.idle_since = at;
    }
  } else {
    vm.idle_since.reset();
  }
  return vm;
}

VmInstance advance_vm(VmInstance vm, VmState to, Timestamp at) {
  while (vm.state != to) {
    VmState next;
    switch (vm.state) {
      case VmState::Requested:
        next = (to == VmState::Failed) ? VmState::Failed : VmState::Starting;
        break;
      case VmState::Starting:
        next = (to == VmState::Failed) ? VmState::Failed : VmState::Up;
        break;
      case VmState::Up:
        next = VmState::Draining;
        break;
      case VmState::Draining:
        next = VmState::Stopped;
        break;
      default:
        throw IllegalTransition(to_string(vm.state), to_string(to));
    }
    vm = transition_vm(std::move(vm), next, at);
  }
  return vm;
}

std::int64_t vm_idle_seconds(const VmInstance& vm, Timestamp now) {
  if (!vm.idle_since) {
    return 0;
  }
  return now - *vm.idle_since;
}

void vm_begin_job(VmInstance& vm, Timestamp) {
  if (vm.state != VmState::Up) {
    throw Error("vm " + vm.id + ": job assigned while " + to_string(vm.state));
  }
  ++vm.running_jobs;
  vm.idle_since.reset();
}

void vm_end_job(VmInstance& vm, Timestamp now) {
  if (vm.state != VmState::Up || vm.running_jobs <= 0) {
    throw Error("vm " + vm.id + ": job finished while " + to_string(vm.state));
  }
  --vm.running_jobs;
  if (vm.running_jobs == 0) {
    vm.idle_since = now;
  }
}

}  // namespace burst
