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

#include "burst/policy.hpp"

namespace burst {

bool is_cloud_candidate(const Job& job, const PolicyConfig& cfg) {
  if (!cfg.enabled) {
    return false;
  }
  return job.queue == cfg.candidate_queue;
}

bool is_new_vm_needed(const PolicyContext& ctx, const PolicyConfig& cfg) {
  if (!cfg.enabled) {
    return false;
  }
  // Strict inequality: at exactly ratio * vms, no new VM.
  return static_cast<double>(ctx.candidates.size()) >
         cfg.scaleup_ratio * static_cast<double>(ctx.vms.size());
}

bool can_vm_be_stopped(const VmInstance& vm, Timestamp now, const PolicyConfig& cfg) {
  // Strict inequality: idle == timeout keeps the VM one more tick.
  return vm_idle_seconds(vm, now) > cfg.idle_timeout_s;
}

}  // namespace burst
