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

#include "burst/provider.hpp"

#include <fmt/format.h>

#include "burst/errors.hpp"
#include "burst/rng.hpp"
#include "burst/subprocess.hpp"

namespace burst {

int billing_increments(std::int64_t lifetime_s, std::int64_t increment_s) {
  if (increment_s <= 0) {
    throw ConfigError("billing_increment must be > 0");
  }
  if (lifetime_s <= 0) {
    return 0;
  }
  return static_cast<int>((lifetime_s + increment_s - 1) / increment_s);
}

namespace {

void validate(const ProviderConfig& cfg) {
  if (cfg.boot_latency_s < 0 || cfg.launch_stagger_s < 0) {
    throw ConfigError("boot_latency and launch_stagger must be >= 0");
  }
  if (cfg.billing_increment_s <= 0) {
    throw ConfigError("billing_increment must be > 0");
  }
  if (cfg.failure_rate < 0.0 || cfg.failure_rate >= 1.0) {
    throw ConfigError("failure_rate must be in [0, 1)");
  }
  if (cfg.price_per_increment < 0.0) {
    throw ConfigError("price_per_increment must be >= 0");
  }
}

void check_stagger(const std::optional<Timestamp>& last, Timestamp now, std::int64_t stagger) {
  if (last && now - *last < stagger) {
    throw StaggerViolation(stagger - (now - *last));
  }
}

BillingSummary settle(const VmInstance& vm, Timestamp now, const ProviderConfig& cfg) {
  if (vm.state != VmState::Draining) {
    throw IllegalTransition(to_string(vm.state), to_string(VmState::Stopped));
  }
  BillingSummary bill;
  bill.vm_id = vm.id;
  bill.requested_at = vm.requested_at;
  bill.stopped_at = now;
  bill.increments = billing_increments(now - vm.requested_at, cfg.billing_increment_s);
  bill.cost = bill.increments * cfg.price_per_increment;
  return bill;
}

}  // namespace

SimulatedCloudProvider::SimulatedCloudProvider(ProviderConfig cfg, std::uint64_t seed)
    : cfg_(std::move(cfg)), seed_(seed) {
  validate(cfg_);
}

int SimulatedCloudProvider::live_count() const {
  int n = 0;
  for (const auto& [id, entry] : vms_) {
    if (!entry.terminal) {
      ++n;
    }
  }
  return n;
}

VmInstance SimulatedCloudProvider::request_vm(Timestamp now) {
  if (live_count() >= cfg_.max_vms) {
    throw CapReached(cfg_.max_vms);
  }
  check_stagger(last_request_, now, cfg_.launch_stagger_s);

  std::string id = fmt::format("vm-{:06}", next_id_++);
  Entry entry;
  entry.requested_at = now;
  entry.due = now + cfg_.boot_latency_s;
  entry.fails = hash_unit(seed_, id) < cfg_.failure_rate;
  vms_.emplace(id, entry);
  last_request_ = now;

  VmInstance vm;
  vm.id = id;
  vm.state = VmState::Requested;
  vm.requested_at = now;
  vm.provider_handle = id;
  return vm;
}

std::vector<VmStateChange> SimulatedCloudProvider::poll(Timestamp now) {
  std::vector<VmStateChange> changes;
  for (auto& [id, entry] : vms_) {
    if (entry.delivered || entry.terminal || entry.due > now) {
      continue;
    }
    entry.delivered = true;
    if (entry.fails) {
      entry.terminal = true;
      changes.push_back({id, VmState::Failed, "reason=boot_failure"});
    } else {
      changes.push_back({id, VmState::Up, ""});
    }
  }
  return changes;
}

BillingSummary SimulatedCloudProvider::stop_vm(const VmInstance& vm, Timestamp now) {
  auto it = vms_.find(vm.id);
  if (it == vms_.end()) {
    throw Error("unknown vm '" + vm.id + "'");
  }
  BillingSummary bill = settle(vm, now, cfg_);
  it->second.terminal = true;
  return bill;
}

CommandProvider::CommandProvider(ProviderConfig cfg)
    : CommandProvider(std::move(cfg), poll_timeout_from_env()) {}

CommandProvider::CommandProvider(ProviderConfig cfg, std::int64_t timeout_s)
    : cfg_(std::move(cfg)), timeout_s_(timeout_s) {
  validate(cfg_);
  if (cfg_.start_cmd.empty() || cfg_.stop_cmd.empty() || cfg_.status_cmd.empty()) {
    throw ConfigError("command provider needs provider.start_cmd, stop_cmd and status_cmd");
  }
}

VmInstance CommandProvider::request_vm(Timestamp now) {
  int live = 0;
  for (const auto& [id, entry] : vms_) {
    if (!entry.stopped) {
      ++live;
    }
  }
  if (live >= cfg_.max_vms) {
    throw CapReached(cfg_.max_vms);
  }
  check_stagger(last_request_, now, cfg_.launch_stagger_s);

  std::string id = fmt::format("vm-{:06}", next_id_);
  CommandResult res = run_command(cfg_.start_cmd + " " + id, timeout_s_);
  if (res.timed_out || res.exit_code != 0) {
    throw AdapterError(res.exit_code, res.err.substr(0, 200));
  }
  // First stdout line is the provider handle for later stop/status calls.
  std::string handle = res.out.substr(0, res.out.find('\n'));
  if (handle.empty()) {
    throw AdapterError(0, "start command printed no provider handle");
  }
  ++next_id_;
  vms_.emplace(id, Entry{handle, false, false});
  by_handle_[handle] = id;
  last_request_ = now;

  VmInstance vm;
  vm.id = id;
  vm.state = VmState::Requested;
  vm.requested_at = now;
  vm.provider_handle = handle;
  return vm;
}

std::vector<VmStateChange> CommandProvider::poll(Timestamp) {
  CommandResult res = run_command(cfg_.status_cmd, timeout_s_);
  if (res.timed_out || res.exit_code != 0) {
    throw AdapterError(res.exit_code, res.err.substr(0, 200));
  }

  std::map<std::string, VmState> reported;  // vm_id -> state, sorted by vm id
  std::size_t line_no = 0;
  std::size_t start = 0;
  const std::string& text = res.out;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    std::string line =
        text.substr(start, nl == std::string::npos ? text.size() - start : nl - start);
    start = (nl == std::string::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    auto sep = line.find('|');
    if (sep == std::string::npos) {
      throw ParseError(line_no, "expected <provider_handle>|<STARTING|UP|FAILED>");
    }
    std::string handle = line.substr(0, sep);
    auto state = vm_state_from(line.substr(sep + 1));
    if (!state ||
        (*state != VmState::Starting && *state != VmState::Up && *state != VmState::Failed)) {
      throw ParseError(line_no, "state must be STARTING, UP or FAILED");
    }
    auto it = by_handle_.find(handle);
    if (it == by_handle_.end()) {
      continue;  // not ours
    }
    reported[it->second] = *state;
  }

  std::vector<VmStateChange> changes;
  for (const auto& [vm_id, state] : reported) {
    auto& entry = vms_.at(vm_id);
    if (entry.reported_terminal || entry.stopped) {
      continue;
    }
    if (state == VmState::Up) {
      entry.reported_terminal = true;
      changes.push_back({vm_id, VmState::Up, ""});
    } else if (state == VmState::Failed) {
      entry.reported_terminal = true;
      changes.push_back({vm_id, VmState::Failed, "reason=provider_reported"});
    }
  }
  return changes;
}

BillingSummary CommandProvider::stop_vm(const VmInstance& vm, Timestamp now) {
  auto it = vms_.find(vm.id);
  if (it == vms_.end()) {
    throw Error("unknown vm '" + vm.id + "'");
  }
  BillingSummary bill = settle(vm, now, cfg_);
  CommandResult res = run_command(cfg_.stop_cmd + " " + it->second.handle, timeout_s_);
  if (res.timed_out || res.exit_code != 0) {
    throw AdapterError(res.exit_code, res.err.substr(0, 200));
  }
  it->second.stopped = true;
  return bill;
}

}  // namespace burst
