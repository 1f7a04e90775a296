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

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "burst/accounting.hpp"
#include "burst/orchestrator.hpp"
#include "burst/policy.hpp"
#include "burst/provider.hpp"

namespace burst {

struct SimulationConfig {
  std::int64_t time_interval_s = 30;
  Timestamp start_time = 0;
  int max_vms = 0;       // authoritative cap; overrides provider.max_vms
  int cluster_size = 0;  // always-on, free local nodes
  std::vector<AccountingRecord> trace;
  ProviderConfig provider;
  PolicyConfig policy;
  std::uint64_t seed = 0;
};

/// One row of the simulation time series, sampled at the end of every tick.
struct TimeSeriesPoint {
  Timestamp at = 0;
  int pending = 0;
  int running = 0;
  int nodes_available = 0;  // cluster_size + UP VMs
  int vms_idle = 0;
};

enum class NodeKind { Local, Cloud };

const char* to_string(NodeKind k);

/// Start/end of one job, enough to redraw per-job utilization plots.
struct UtilizationRecord {
  std::string job_id;
  Timestamp started_at = 0;
  Timestamp finished_at = 0;
  NodeKind node_kind = NodeKind::Local;
};

struct Assignment {
  std::string job_id;
  std::string node_id;
  NodeKind kind = NodeKind::Local;
};

/// Minimal stand-in for the batch scheduler: scan pending jobs in
/// (submit_time, job_id) order; non-candidates may take only local slots,
/// candidates take local slots first and then cloud nodes, oldest-idle
/// first. A job that does not fit is skipped without blocking later jobs
/// that fit elsewhere. Local slots are consumed in the order given.
std::vector<Assignment> dispatch_fifo(const std::vector<const Job*>& pending,
                                      const std::vector<std::string>& free_local,
                                      std::vector<const VmInstance*> idle_cloud);

/// The simulator's cluster model (tick phase 4): finishes jobs whose time is
/// up — completion is quantized to tick boundaries — then dispatches, then
/// finishes zero-wait jobs so a zero-duration job starts and ends in the same
/// tick. Local nodes are always up and free of charge.
class FifoCluster final : public ClusterModel {
 public:
  FifoCluster(int cluster_size, ReplayJobSource& source);

  void tick(OrchestratorState& state, const QueueSnapshot& snapshot, Timestamp now) override;
  int free_local_slots() const override { return static_cast<int>(free_local_.size()); }

  int running_count() const { return static_cast<int>(running_.size()); }
  const std::vector<UtilizationRecord>& utilization() const { return utilization_; }
  std::optional<Timestamp> last_finish() const { return last_finish_; }

 private:
  struct RunningJob {
    Timestamp submit = 0;
    std::string node_id;
    NodeKind kind = NodeKind::Local;
    int local_index = -1;
    Timestamp started = 0;
    Timestamp due = 0;
  };

  void complete_due(OrchestratorState& state, Timestamp now);
  void dispatch(OrchestratorState& state, Timestamp now);

  int cluster_size_;
  ReplayJobSource& source_;
  std::set<int> free_local_;  // free slot indices, lowest first
  std::map<std::string, RunningJob> running_;
  std::vector<UtilizationRecord> utilization_;
  std::optional<Timestamp> last_finish_;
};

struct SimulationResult {
  std::vector<DecisionEvent> decisions;
  std::vector<TimeSeriesPoint> series;
  std::vector<UtilizationRecord> utilization;
  std::vector<BillingSummary> billing;
  std::int64_t makespan_s = 0;
  double total_cost = 0.0;
  int vm_starts = 0;
};

/// Replays the trace through the orchestrator on a virtual clock, one tick
/// per time_interval_s, until every job has finished and every VM is stopped
/// (trailing idle-timeout and final billing included). Deterministic: a fixed
/// config reproduces the outputs byte for byte.
/// Throws NonTermination when the workload can never drain.
SimulationResult simulate(const SimulationConfig& cfg);

void emit_decisions(const std::vector<DecisionEvent>& events, std::ostream& os);
void emit_timeseries(const std::vector<TimeSeriesPoint>& series, std::ostream& os);
void emit_billing(const std::vector<BillingSummary>& billing, std::ostream& os);
void emit_utilization(const std::vector<UtilizationRecord>& records, std::ostream& os);

std::vector<TimeSeriesPoint> parse_timeseries(std::string_view text);

}  // namespace burst
