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

#include <string>
#include <vector>

#include "burst/job.hpp"
#include "burst/time.hpp"
#include "burst/vm.hpp"

namespace burst {

/// Knobs for the built-in declarative policy.
///
/// `enabled` defaults to false and gates candidate selection and scale-up:
/// an orchestrator nobody configured must never start cloud nodes. It does
/// NOT gate scale-down — an orchestrator must always be able to drain VMs it
/// owns. idle_timeout_s = 0 stops a VM on the first tick it is seen idle.
struct PolicyConfig {
  bool enabled = false;
  std::string candidate_queue = "cloud.q";
  double scaleup_ratio = 2.0;
  std::int64_t idle_timeout_s = 600;
};

/// What a policy gets to look at, assembled once per tick.
/// candidates are the cloud-eligible pending jobs; vms the live managed VMs
/// (REQUESTED/STARTING/UP/DRAINING). Pointers are valid for the duration of
/// the policy call only.
struct PolicyContext {
  Timestamp now = 0;
  std::vector<const Job*> candidates;
  std::vector<const VmInstance*> vms;
  int pending_total = 0;
  int local_nodes_free = 0;
};

/// Is this pending job eligible to run on cloud nodes?
/// Disabled policy denies everything; enabled, it admits exactly the jobs
/// submitted to the configured candidate queue.
bool is_cloud_candidate(const Job& job, const PolicyConfig& cfg);

/// Should another VM be started? True iff enabled and the number of queued
/// candidates strictly exceeds scaleup_ratio times the number of live VMs.
bool is_new_vm_needed(const PolicyContext& ctx, const PolicyConfig& cfg);

/// May this idle VM be stopped? True iff it has been idle strictly longer
/// than idle_timeout_s. Not gated by `enabled`.
bool can_vm_be_stopped(const VmInstance& vm, Timestamp now, const PolicyConfig& cfg);

/// Extension point: the three decision hooks the orchestrator consults each
/// tick. Implementations must be pure functions of their arguments — no
/// hidden state between ticks.
class Policy {
 public:
  virtual ~Policy() = default;

  virtual bool is_cloud_candidate(const Job& job) const = 0;
  virtual bool is_new_vm_needed(const PolicyContext& ctx) const = 0;
  virtual bool can_vm_be_stopped(const VmInstance& vm, Timestamp now) const = 0;
};

/// The built-in policy: configured, not coded. Reproduces the queue-name
/// candidate rule, the ratio scale-up threshold and the idle-timeout stop
/// rule from PolicyConfig.
class RulePolicy final : public Policy {
 public:
  RulePolicy() = default;
  explicit RulePolicy(PolicyConfig cfg) : cfg_(std::move(cfg)) {}

  bool is_cloud_candidate(const Job& job) const override {
    return burst::is_cloud_candidate(job, cfg_);
  }
  bool is_new_vm_needed(const PolicyContext& ctx) const override {
    return burst::is_new_vm_needed(ctx, cfg_);
  }
  bool can_vm_be_stopped(const VmInstance& vm, Timestamp now) const override {
    return burst::can_vm_be_stopped(vm, now, cfg_);
  }

  const PolicyConfig& config() const { return cfg_; }

 private:
  PolicyConfig cfg_;
};

}  // namespace burst
