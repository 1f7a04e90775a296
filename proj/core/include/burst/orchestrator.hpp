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

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "burst/clock.hpp"
#include "burst/events.hpp"
#include "burst/job.hpp"
#include "burst/job_source.hpp"
#include "burst/policy.hpp"
#include "burst/provider.hpp"
#include "burst/vm.hpp"

namespace burst {

/// Jobs in dispatch order: (submit_time, job_id).
using JobOrder = std::set<std::pair<Timestamp, std::string>>;

/// The control loop's working set. All mutation flows through the
/// single-threaded tick.
struct OrchestratorState {
  std::map<std::string, Job> jobs;
  std::map<std::string, VmInstance> vms;
  JobOrder pending;     // every PENDING job
  JobOrder candidates;  // pending jobs with is_candidate
  std::set<std::string> nodes;  // attached schedulable node ids, local + cloud
  DecisionLog log;

  void drop_from_queues(const Job& job);
  int live_vm_count() const;
};

/// Phase-4 hook of the tick: the simulator plugs in a cluster model that
/// completes and dispatches jobs; live mode plugs in an observer that
/// reconciles job states against the latest snapshot.
class ClusterModel {
 public:
  virtual ~ClusterModel() = default;

  virtual void tick(OrchestratorState& state, const QueueSnapshot& snapshot, Timestamp now) = 0;
  virtual int free_local_slots() const { return 0; }
};

/// Live-mode phase 4: a known job absent from the snapshot has finished; a
/// job reported RUNNING was started by the batch scheduler.
class LiveJobObserver final : public ClusterModel {
 public:
  void tick(OrchestratorState& state, const QueueSnapshot& snapshot, Timestamp now) override;
};

/// The main loop: poll jobs, mark candidates, attach booted VMs, let the
/// cluster model dispatch or observe, stop idle VMs, then — stop strictly
/// before start — request at most one new VM. One instance per job source.
class Orchestrator {
 public:
  Orchestrator(JobSource& source, NodeProvider& provider, const Policy& policy,
               ClusterModel& cluster, Clock clock, std::vector<std::string> local_nodes);

  /// Runs phases (1)-(6) once; returns the tick's timestamp. In VIRTUAL mode
  /// the clock advances by one step afterwards. AdapterError/ParseError stop
  /// the tick where they occur (logged to stderr, state mutated so far kept);
  /// IllegalTransition propagates — that is a bug.
  Timestamp tick();

  void attach_node(const std::string& vm_id);  // pre: vm UP, not attached
  void detach_node(const std::string& vm_id);  // pre: attached, no running jobs

  OrchestratorState& state() { return state_; }
  const OrchestratorState& state() const { return state_; }
  Clock& clock() { return clock_; }
  const std::vector<BillingSummary>& billing() const { return billing_; }

 private:
  void ingest(const QueueSnapshot& snapshot);
  void mark_candidates();
  void poll_provider(Timestamp now);
  void evaluate_stop(Timestamp now);
  void evaluate_start(Timestamp now);
  PolicyContext make_context(Timestamp now) const;

  JobSource& source_;
  NodeProvider& provider_;
  const Policy& policy_;
  ClusterModel& cluster_;
  Clock clock_;
  OrchestratorState state_;
  std::vector<BillingSummary> billing_;
  std::set<std::string> policy_evaluated_;  // job ids already shown to the candidate hook
};

}  // namespace burst
