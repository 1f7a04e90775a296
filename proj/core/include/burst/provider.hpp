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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "burst/time.hpp"
#include "burst/vm.hpp"

namespace burst {

struct ProviderConfig {
  std::int64_t boot_latency_s = 120;      // request -> node ready
  std::int64_t launch_stagger_s = 60;     // minimum spacing between accepted requests
  std::int64_t billing_increment_s = 3600;
  double price_per_increment = 1.0;
  double failure_rate = 0.0;              // simulated backend only, in [0, 1)
  int max_vms = 0;
  // External-command backend. start_cmd gets the vm id appended, stop_cmd the
  // provider handle; status_cmd prints one `<handle>|<STARTING|UP|FAILED>`
  // line per VM.
  std::string start_cmd;
  std::string stop_cmd;
  std::string status_cmd;
};

/// Charge for one VM: increments = ceil(billed wall time / billing_increment).
/// Billing runs from requested_at — churn is what the idle-timeout policy
/// trades against, so the provider charges for boot time too.
struct BillingSummary {
  std::string vm_id;
  Timestamp requested_at = 0;
  Timestamp stopped_at = 0;
  int increments = 0;
  double cost = 0.0;
};

int billing_increments(std::int64_t lifetime_s, std::int64_t increment_s);

/// A boot completion or failure observed by poll().
struct VmStateChange {
  std::string vm_id;
  VmState state = VmState::Up;
  std::string detail;
};

/// Backend able to start and stop compute nodes.
class NodeProvider {
 public:
  virtual ~NodeProvider() = default;

  /// Starts one node. Throws CapReached when live VMs (REQUESTED/STARTING/
  /// UP/DRAINING) would exceed max_vms, StaggerViolation when called sooner
  /// than launch_stagger after the previous accepted request; callers retry
  /// next tick.
  virtual VmInstance request_vm(Timestamp now) = 0;

  /// Boot completions/failures due by `now`, delivered exactly once, ordered
  /// by vm id. Repeating the poll within a tick yields nothing further.
  virtual std::vector<VmStateChange> poll(Timestamp now) = 0;

  /// Stops a DRAINED node and settles its bill. The caller must have
  /// detached the node first; any other state is an IllegalTransition.
  virtual BillingSummary stop_vm(const VmInstance& vm, Timestamp now) = 0;

  virtual const ProviderConfig& config() const = 0;
};

/// In-process cloud model: boots complete (or fail, per a deterministic
/// per-vm hash of run seed and vm id) boot_latency_s after the request.
class SimulatedCloudProvider final : public NodeProvider {
 public:
  SimulatedCloudProvider(ProviderConfig cfg, std::uint64_t seed);

  VmInstance request_vm(Timestamp now) override;
  std::vector<VmStateChange> poll(Timestamp now) override;
  BillingSummary stop_vm(const VmInstance& vm, Timestamp now) override;
  const ProviderConfig& config() const override { return cfg_; }

  int live_count() const;

 private:
  struct Entry {
    Timestamp requested_at = 0;
    Timestamp due = 0;
    bool fails = false;
    bool delivered = false;
    bool terminal = false;  // stopped or failed
  };

  ProviderConfig cfg_;
  std::uint64_t seed_;
  std::map<std::string, Entry> vms_;
  std::optional<Timestamp> last_request_;
  int next_id_ = 1;
};

/// Drives real infrastructure through three configured commands.
class CommandProvider final : public NodeProvider {
 public:
  explicit CommandProvider(ProviderConfig cfg);
  CommandProvider(ProviderConfig cfg, std::int64_t timeout_s);

  VmInstance request_vm(Timestamp now) override;
  std::vector<VmStateChange> poll(Timestamp now) override;
  BillingSummary stop_vm(const VmInstance& vm, Timestamp now) override;
  const ProviderConfig& config() const override { return cfg_; }

 private:
  struct Entry {
    std::string handle;
    bool reported_terminal = false;  // UP or FAILED already delivered
    bool stopped = false;
  };

  ProviderConfig cfg_;
  std::int64_t timeout_s_;
  std::map<std::string, Entry> vms_;      // vm_id -> entry
  std::map<std::string, std::string> by_handle_;
  std::optional<Timestamp> last_request_;
  int next_id_ = 1;
};

}  // namespace burst
