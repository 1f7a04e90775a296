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
#include <string>
#include <string_view>

#include "burst/policy.hpp"
#include "burst/provider.hpp"

namespace burst {

/// Flat `section.key = value` text, `#` comments, blank lines ignored.
using ConfigMap = std::map<std::string, std::string>;

ConfigMap parse_config_text(std::string_view text);
ConfigMap load_config_file(const std::string& path);

/// policy.enabled, policy.candidate_queue, policy.scaleup_ratio,
/// policy.idle_timeout_s. Unknown policy.* keys are a startup error.
PolicyConfig policy_config_from(const ConfigMap& cfg);

/// provider.boot_latency_s, provider.launch_stagger_s,
/// provider.billing_increment_s, provider.price_per_increment,
/// provider.failure_rate, provider.max_vms, provider.start_cmd,
/// provider.stop_cmd, provider.status_cmd.
ProviderConfig provider_config_from(const ConfigMap& cfg);

/// Everything cmd `run` needs on top of policy and provider settings.
struct DaemonConfig {
  PolicyConfig policy;
  ProviderConfig provider;
  std::string poll_cmd;              // scheduler.poll_cmd, required
  std::int64_t poll_interval_s = 30; // orchestrator.poll_interval_s
  std::string workdir = ".";         // orchestrator.workdir
  int cluster_size = 0;              // orchestrator.cluster_size
  std::uint64_t max_ticks = 0;       // orchestrator.max_ticks, 0 = run until signaled
};

DaemonConfig daemon_config_from(const ConfigMap& cfg);

/// Rejects keys outside the known set (typos must not silently default).
void validate_config_keys(const ConfigMap& cfg);

}  // namespace burst
