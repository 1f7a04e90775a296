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

#include "burst/simulator.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include <fmt/format.h>

#include "burst/errors.hpp"

namespace burst {

const char* to_string(NodeKind k) {
  return k == NodeKind::Local ? "LOCAL" : "CLOUD";
}

std::vector<Assignment> dispatch_fifo(const std::vector<const Job*>& pending,
                                      const std::vector<std::string>& free_local,
                                      std::vector<const VmInstance*> idle_cloud) {
  // Oldest-idle cloud node first: the one closest to its idle timeout gets
  // fresh work, ties broken by id.
  std::sort(idle_cloud.begin(), idle_cloud.end(),
            [](const VmInstance* a, const VmInstance* b) {
              auto ia = a->idle_since.value_or(0);
              auto ib = b->idle_since.value_or(0);
              return ia != ib ? ia < ib : a->id < b->id;
            });

  std::vector<Assignment> out;
  std::size_t li = 0;
  std::size_t ci = 0;
  for (const Job* job : pending) {
    if (li == free_local.size() && ci == idle_cloud.size()) {
      break;
    }
    if (li < free_local.size()) {
      out.push_back({job->id, free_local[li++], NodeKind::Local});
    } else if (job->is_candidate && ci < idle_cloud.size()) {
      out.push_back({job->id, idle_cloud[ci++]->id, NodeKind::Cloud});
    }
    // else: skipped; later jobs may still fit on the other node kind
  }
  return out;
}

FifoCluster::FifoCluster(int cluster_size, ReplayJobSource& source)
    : cluster_size_(cluster_size), source_(source) {
  for (int i = 0; i < cluster_size; ++i) {
    free_local_.insert(i);
  }
}

void FifoCluster::complete_due(OrchestratorState& state, Timestamp now) {
  std::vector<std::pair<std::pair<Timestamp, std::string>, const RunningJob*>> due;
  for (const auto& [job_id, rj] : running_) {
    if (rj.due <= now) {
      due.push_back({{rj.submit, job_id}, &rj});
    }
  }
  std::sort(due.begin(), due.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  for (const auto& [key, rjp] : due) {
    const std::string& job_id = key.second;
    RunningJob rj = *rjp;
    Job& job = state.jobs.at(job_id);
    job.state = JobState::Finished;
    job.assigned_node.reset();
    state.log.append(now, EventKind::JobFinished, job_id,
                     fmt::format("node={} runtime_s={}", rj.node_id, now - rj.started));
    if (rj.kind == NodeKind::Local) {
      free_local_.insert(rj.local_index);
    } else {
      vm_end_job(state.vms.at(rj.node_id), now);
    }
    utilization_.push_back({job_id, rj.started, now, rj.kind});
    source_.mark_finished(job_id);
    last_finish_ = last_finish_ ? std::max(*last_finish_, now) : now;
    running_.erase(job_id);
  }
}

void FifoCluster::dispatch(OrchestratorState& state, Timestamp now) {
  std::vector<const VmInstance*> idle_cloud;
  for (const auto& [id, vm] : state.vms) {
    if (vm.state == VmState::Up && vm.running_jobs == 0 && state.nodes.contains(id)) {
      idle_cloud.push_back(&vm);
    }
  }
  if (free_local_.empty() && idle_cloud.empty()) {
    return;
  }

  std::vector<const Job*> pending;
  pending.reserve(state.pending.size());
  for (const auto& [submit, id] : state.pending) {
    pending.push_back(&state.jobs.at(id));
  }
  std::vector<std::string> local_ids;
  local_ids.reserve(free_local_.size());
  for (int idx : free_local_) {
    local_ids.push_back(fmt::format("local-{}", idx));
  }

  auto local_it = free_local_.begin();
  for (const auto& a : dispatch_fifo(pending, local_ids, idle_cloud)) {
    Job& job = state.jobs.at(a.job_id);
    if (!job.duration_s) {
      throw Error("job '" + job.id + "' has no duration; cannot simulate");
    }
    RunningJob rj;
    rj.submit = job.submit_time;
    rj.node_id = a.node_id;
    rj.kind = a.kind;
    rj.started = now;
    rj.due = now + *job.duration_s;
    if (a.kind == NodeKind::Local) {
      rj.local_index = *local_it;           // slots were offered in this order
      local_it = free_local_.erase(local_it);
    } else {
      vm_begin_job(state.vms.at(a.node_id), now);
    }
    job.state = JobState::Running;
    job.assigned_node = a.node_id;
    state.drop_from_queues(job);
    state.log.append(now, EventKind::JobDispatched, a.job_id,
                     fmt::format("node={} kind={}", a.node_id, to_string(a.kind)));
    source_.mark_running(a.job_id);
    running_.emplace(a.job_id, std::move(rj));
  }
}

void FifoCluster::tick(OrchestratorState& state, const QueueSnapshot&, Timestamp now) {
  complete_due(state, now);
  dispatch(state, now);
  // Zero-duration (and generally zero-wait) jobs end in the tick they start;
  // slots they free are offered again next tick.
  complete_due(state, now);
}

namespace {

TimeSeriesPoint sample(const OrchestratorState& state, const FifoCluster& cluster,
                       const SimulationConfig& cfg, Timestamp at) {
  TimeSeriesPoint p;
  p.at = at;
  p.pending = static_cast<int>(state.pending.size());
  p.running = cluster.running_count();
  int up = 0;
  int idle = 0;
  for (const auto& [id, vm] : state.vms) {
    if (vm.state == VmState::Up) {
      ++up;
      if (vm.running_jobs == 0) {
        ++idle;
      }
    }
  }
  p.nodes_available = cfg.cluster_size + up;
  p.vms_idle = idle;
  return p;
}

// Virtual-time budget: even run strictly sequentially through one slot, with
// boot, trailing idle timeout and billing settlement, the system drains well
// within this. Exceeding it means some configuration churns forever (e.g.
// failure_rate high enough that no VM ever boots).
std::int64_t tick_budget(const SimulationConfig& cfg) {
  std::int64_t work = 0;
  for (const auto& rec : cfg.trace) {
    std::int64_t rounded =
        (rec.duration_s + cfg.time_interval_s - 1) / cfg.time_interval_s + 1;
    work += rounded * cfg.time_interval_s;
  }
  std::int64_t span = cfg.trace.empty()
                          ? 0
                          : std::max<std::int64_t>(
                                0, cfg.trace.back().submit_time - cfg.start_time);
  std::int64_t horizon = span + work + cfg.provider.boot_latency_s +
                         cfg.policy.idle_timeout_s + cfg.provider.billing_increment_s +
                         10 * cfg.time_interval_s;
  return 2 * (horizon / cfg.time_interval_s) + 100;
}

}  // namespace

SimulationResult simulate(const SimulationConfig& cfg) {
  if (cfg.time_interval_s < 1) {
    throw ConfigError("time_interval must be >= 1 second");
  }
  if (cfg.cluster_size < 0 || cfg.max_vms < 0) {
    throw ConfigError("cluster_size and max_vms must be >= 0");
  }
  if (!cfg.trace.empty() && cfg.cluster_size == 0 && cfg.max_vms == 0) {
    throw NonTermination("jobs can never run: cluster_size=0 and max_vms=0");
  }

  ProviderConfig provider_cfg = cfg.provider;
  provider_cfg.max_vms = cfg.max_vms;

  ReplayJobSource source(cfg.trace);
  SimulatedCloudProvider provider(provider_cfg, cfg.seed);
  RulePolicy policy(cfg.policy);
  FifoCluster cluster(cfg.cluster_size, source);
  std::vector<std::string> local_nodes;
  local_nodes.reserve(static_cast<std::size_t>(cfg.cluster_size));
  for (int i = 0; i < cfg.cluster_size; ++i) {
    local_nodes.push_back(fmt::format("local-{}", i));
  }
  Orchestrator orch(source, provider, policy, cluster,
                    Clock::virtual_at(cfg.start_time, cfg.time_interval_s),
                    std::move(local_nodes));

  SimulationResult result;
  const std::int64_t budget = tick_budget(cfg);
  // A request deferred by the launch stagger produces no event for up to
  // stagger/interval ticks; only a longer event-less stall is a dead end.
  const std::int64_t stuck_threshold =
      cfg.provider.launch_stagger_s / cfg.time_interval_s + 2;
  std::int64_t ticks = 0;
  std::int64_t eventless_stalled_ticks = 0;

  while (true) {
    std::size_t events_before = orch.state().log.size();
    Timestamp at = orch.tick();
    ++ticks;
    result.series.push_back(sample(orch.state(), cluster, cfg, at));

    const OrchestratorState& st = orch.state();
    bool delivered = source.all_delivered(at);
    bool jobs_done = source.finished_jobs() == source.total_jobs();
    bool vms_done = st.live_vm_count() == 0;
    if (delivered && jobs_done && vms_done) {
      break;
    }

    bool no_events = st.log.size() == events_before;
    if (no_events && delivered && !st.pending.empty() && cluster.running_count() == 0 &&
        st.live_vm_count() == 0) {
      if (++eventless_stalled_ticks >= stuck_threshold) {
        throw NonTermination(fmt::format(
            "{} pending job(s) can never be dispatched (no capacity reachable)",
            st.pending.size()));
      }
    } else {
      eventless_stalled_ticks = 0;
    }
    if (ticks > budget) {
      throw NonTermination(
          fmt::format("simulation exceeded its virtual-time budget ({} ticks)", budget));
    }
  }

  result.decisions = orch.state().log.events();
  result.utilization = cluster.utilization();
  result.billing = orch.billing();
  result.makespan_s =
      cluster.last_finish() ? *cluster.last_finish() - cfg.start_time : 0;
  for (const auto& bill : result.billing) {
    result.total_cost += bill.cost;
  }
  for (const auto& e : result.decisions) {
    if (e.kind == EventKind::VmStartRequested) {
      ++result.vm_starts;
    }
  }
  return result;
}

void emit_decisions(const std::vector<DecisionEvent>& events, std::ostream& os) {
  for (const auto& e : events) {
    os << format_event(e) << '\n';
  }
}

void emit_timeseries(const std::vector<TimeSeriesPoint>& series, std::ostream& os) {
  os << "at,pending,running,nodes_available,vms_idle\n";
  for (const auto& p : series) {
    os << fmt::format("{},{},{},{},{}\n", p.at, p.pending, p.running, p.nodes_available,
                      p.vms_idle);
  }
}

void emit_billing(const std::vector<BillingSummary>& billing, std::ostream& os) {
  os << "vm_id,requested_at,stopped_at,increments,cost\n";
  for (const auto& b : billing) {
    os << fmt::format("{},{},{},{},{}\n", b.vm_id, b.requested_at, b.stopped_at, b.increments,
                      b.cost);
  }
}

void emit_utilization(const std::vector<UtilizationRecord>& records, std::ostream& os) {
  os << "job_id,started_at,finished_at,node_kind\n";
  for (const auto& r : records) {
    os << fmt::format("{},{},{},{}\n", r.job_id, r.started_at, r.finished_at,
                      to_string(r.node_kind));
  }
}

std::vector<TimeSeriesPoint> parse_timeseries(std::string_view text) {
  std::vector<TimeSeriesPoint> series;
  std::size_t line_no = 0;
  std::size_t start = 0;
  bool saw_header = false;

  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    std::string_view line =
        text.substr(start, nl == std::string_view::npos ? text.size() - start : nl - start);
    start = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    if (line.empty()) {
      continue;
    }
    if (!saw_header) {
      if (line != "at,pending,running,nodes_available,vms_idle") {
        throw ParseError(line_no, "bad time-series header");
      }
      saw_header = true;
      continue;
    }
    std::int64_t values[5];
    std::size_t field = 0;
    std::size_t fs = 0;
    while (field < 5) {
      auto pos = line.find(',', fs);
      std::string_view cell =
          line.substr(fs, pos == std::string_view::npos ? line.size() - fs : pos - fs);
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), values[field]);
      if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
        throw ParseError(line_no, "bad time-series value");
      }
      ++field;
      if (pos == std::string_view::npos) {
        break;
      }
      fs = pos + 1;
    }
    if (field != 5) {
      throw ParseError(line_no, "expected 5 columns");
    }
    series.push_back({values[0], static_cast<int>(values[1]), static_cast<int>(values[2]),
                      static_cast<int>(values[3]), static_cast<int>(values[4])});
  }
  if (!saw_header) {
    throw ParseError(1, "missing time-series header");
  }
  return series;
}

}  // namespace burst
