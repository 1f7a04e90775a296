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

#include "burst/orchestrator.hpp"

#include <iostream>

#include <fmt/format.h>

#include "burst/errors.hpp"

namespace burst {

void OrchestratorState::drop_from_queues(const Job& job) {
  pending.erase({job.submit_time, job.id});
  candidates.erase({job.submit_time, job.id});
}

int OrchestratorState::live_vm_count() const {
  int n = 0;
  for (const auto& [id, vm] : vms) {
    if (vm_is_live(vm.state)) {
      ++n;
    }
  }
  return n;
}

void LiveJobObserver::tick(OrchestratorState& state, const QueueSnapshot& snapshot,
                           Timestamp now) {
  std::map<std::string, const Job*> observed;
  for (const auto& job : snapshot.jobs) {
    observed[job.id] = &job;
  }

  for (auto& [id, job] : state.jobs) {
    if (job.state == JobState::Finished) {
      continue;
    }
    auto it = observed.find(id);
    if (it == observed.end()) {
      // Gone from the queue listing: the batch system finished (or killed) it.
      state.drop_from_queues(job);
      state.log.append(now, EventKind::JobFinished, id,
                       fmt::format("last_state={}", to_string(job.state)));
      job.state = JobState::Finished;
      continue;
    }
    if (job.state == JobState::Pending && it->second->state == JobState::Running) {
      // The scheduler placed it; the poll format carries no node, so tag it
      // as externally assigned.
      state.drop_from_queues(job);
      job.state = JobState::Running;
      job.assigned_node = "external";
      state.log.append(now, EventKind::JobDispatched, id, "node=external");
    }
  }
}

Orchestrator::Orchestrator(JobSource& source, NodeProvider& provider, const Policy& policy,
                           ClusterModel& cluster, Clock clock,
                           std::vector<std::string> local_nodes)
    : source_(source), provider_(provider), policy_(policy), cluster_(cluster), clock_(clock) {
  for (auto& node : local_nodes) {
    state_.nodes.insert(std::move(node));
  }
}

Timestamp Orchestrator::tick() {
  Timestamp now = clock_.tick_start();
  try {
    QueueSnapshot snapshot = source_.poll(now);  // (1)
    ingest(snapshot);
    mark_candidates();                           // (2)
    poll_provider(now);                          // (3)
    cluster_.tick(state_, snapshot, now);        // (4)
    evaluate_stop(now);                          // (5)
    evaluate_start(now);                         // (6)
  } catch (const AdapterError& e) {
    std::cerr << "tick " << now << " aborted: " << e.what() << "\n";
  } catch (const ParseError& e) {
    std::cerr << "tick " << now << " aborted: " << e.what() << "\n";
  }
  clock_.tick_end();
  return now;
}

void Orchestrator::ingest(const QueueSnapshot& snapshot) {
  for (const auto& observed : snapshot.jobs) {
    if (state_.jobs.contains(observed.id)) {
      continue;  // known; phase 4 reconciles states
    }
    Job job = observed;
    job.state = JobState::Pending;
    job.assigned_node.reset();
    state_.pending.insert({job.submit_time, job.id});
    state_.jobs.emplace(job.id, std::move(job));
  }
}

void Orchestrator::mark_candidates() {
  // The candidate hook sees each job exactly once, when it first appears.
  for (auto& [id, job] : state_.jobs) {
    if (!policy_evaluated_.insert(id).second) {
      continue;
    }
    job.is_candidate = policy_.is_cloud_candidate(job);
    if (job.is_candidate && job.state == JobState::Pending) {
      state_.candidates.insert({job.submit_time, id});
    }
  }
}

void Orchestrator::poll_provider(Timestamp now) {
  for (const auto& change : provider_.poll(now)) {
    auto it = state_.vms.find(change.vm_id);
    if (it == state_.vms.end()) {
      throw Error("provider reported unknown vm '" + change.vm_id + "'");
    }
    it->second = advance_vm(it->second, change.state, now);
    if (change.state == VmState::Up) {
      state_.log.append(now, EventKind::VmUp, change.vm_id,
                        fmt::format("boot_s={}", now - it->second.requested_at));
      attach_node(change.vm_id);
    } else if (change.state == VmState::Failed) {
      state_.log.append(now, EventKind::VmFailed, change.vm_id,
                        change.detail.empty() ? "reason=unknown" : change.detail);
    }
  }
}

void Orchestrator::attach_node(const std::string& vm_id) {
  auto it = state_.vms.find(vm_id);
  if (it == state_.vms.end()) {
    throw Error("attach of unknown vm '" + vm_id + "'");
  }
  const VmInstance& vm = it->second;
  if (vm.state != VmState::Up) {
    throw IllegalTransition(to_string(vm.state), "ATTACHED");
  }
  if (!state_.nodes.insert(vm_id).second) {
    throw Error("vm '" + vm_id + "' attached twice");
  }
  state_.log.append(clock_.now(), EventKind::VmAttached, vm_id,
                    fmt::format("nodes={}", state_.nodes.size()));
}

void Orchestrator::detach_node(const std::string& vm_id) {
  auto it = state_.vms.find(vm_id);
  if (it == state_.vms.end() || !state_.nodes.contains(vm_id)) {
    throw Error("detach of unattached node '" + vm_id + "'");
  }
  VmInstance& vm = it->second;
  if (vm.running_jobs > 0) {
    throw BusyNode(vm_id);
  }
  Timestamp now = clock_.now();
  std::int64_t idle = vm_idle_seconds(vm, now);
  // Node removal first, then the drain transition: the scheduler must stop
  // considering the node before the VM leaves UP.
  state_.nodes.erase(vm_id);
  vm = transition_vm(vm, VmState::Draining, now);
  state_.log.append(now, EventKind::VmDrain, vm_id, fmt::format("idle_s={}", idle));
}

void Orchestrator::evaluate_stop(Timestamp now) {
  std::vector<std::string> to_stop;
  for (const auto& [id, vm] : state_.vms) {
    if (vm.state == VmState::Up && vm.running_jobs == 0 &&
        policy_.can_vm_be_stopped(vm, now)) {
      to_stop.push_back(id);
    }
  }
  for (const auto& id : to_stop) {
    detach_node(id);
    VmInstance& vm = state_.vms.at(id);
    BillingSummary bill = provider_.stop_vm(vm, now);
    vm = transition_vm(vm, VmState::Stopped, now);
    vm.billed_increments = bill.increments;
    billing_.push_back(bill);
    state_.log.append(now, EventKind::VmStop, id,
                      fmt::format("increments={} cost={}", bill.increments, bill.cost));
  }
}

void Orchestrator::evaluate_start(Timestamp now) {
  PolicyContext ctx = make_context(now);
  if (!policy_.is_new_vm_needed(ctx)) {
    return;
  }
  try {
    VmInstance vm = provider_.request_vm(now);  // at most one per tick
    std::string id = vm.id;
    state_.vms.emplace(id, std::move(vm));
    state_.log.append(now, EventKind::VmStartRequested, id,
                      fmt::format("candidates={} vms={}", ctx.candidates.size(),
                                  ctx.vms.size()));
  } catch (const CapReached&) {
    // Retry next tick once a VM stops.
  } catch (const StaggerViolation&) {
    // Retry next tick once the stagger has elapsed.
  }
}

PolicyContext Orchestrator::make_context(Timestamp now) const {
  PolicyContext ctx;
  ctx.now = now;
  ctx.pending_total = static_cast<int>(state_.pending.size());
  ctx.local_nodes_free = cluster_.free_local_slots();
  ctx.candidates.reserve(state_.candidates.size());
  for (const auto& [submit, id] : state_.candidates) {
    ctx.candidates.push_back(&state_.jobs.at(id));
  }
  for (const auto& [id, vm] : state_.vms) {
    if (vm_is_live(vm.state)) {
      ctx.vms.push_back(&vm);
    }
  }
  return ctx;
}

}  // namespace burst
