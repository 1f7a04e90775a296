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

#include "burst/config.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "burst/errors.hpp"

namespace burst {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

constexpr std::array kKnownKeys = {
    "policy.enabled",
    "policy.candidate_queue",
    "policy.scaleup_ratio",
    "policy.idle_timeout_s",
    "provider.boot_latency_s",
    "provider.launch_stagger_s",
    "provider.billing_increment_s",
    "provider.price_per_increment",
    "provider.failure_rate",
    "provider.max_vms",
    "provider.start_cmd",
    "provider.stop_cmd",
    "provider.status_cmd",
    "scheduler.poll_cmd",
    "orchestrator.poll_interval_s",
    "orchestrator.workdir",
    "orchestrator.cluster_size",
    "orchestrator.max_ticks",
};

std::int64_t get_i64(const ConfigMap& cfg, const std::string& key, std::int64_t def) {
  auto it = cfg.find(key);
  if (it == cfg.end()) {
    return def;
  }
  std::int64_t v = 0;
  const std::string& s = it->second;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError(key + " must be an integer, got '" + s + "'");
  }
  return v;
}

double get_double(const ConfigMap& cfg, const std::string& key, double def) {
  auto it = cfg.find(key);
  if (it == cfg.end()) {
    return def;
  }
  try {
    std::size_t pos = 0;
    double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) {
      throw std::invalid_argument("");
    }
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key + " must be a number, got '" + it->second + "'");
  }
}

bool get_bool(const ConfigMap& cfg, const std::string& key, bool def) {
  auto it = cfg.find(key);
  if (it == cfg.end()) {
    return def;
  }
  const std::string& s = it->second;
  if (s == "true" || s == "yes" || s == "1") return true;
  if (s == "false" || s == "no" || s == "0") return false;
  throw ConfigError(key + " must be a boolean, got '" + s + "'");
}

std::string get_str(const ConfigMap& cfg, const std::string& key, std::string def) {
  auto it = cfg.find(key);
  return it == cfg.end() ? def : it->second;
}

}  // namespace

ConfigMap parse_config_text(std::string_view text) {
  ConfigMap cfg;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    std::string_view line =
        text.substr(start, nl == std::string_view::npos ? text.size() - start : nl - start);
    start = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    line = trim(line);
    if (line.empty() || line.front() == '#') {
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
    }
    if (!cfg.emplace(key, value).second) {
      throw ConfigError("config line " + std::to_string(line_no) + ": duplicate key '" + key +
                        "'");
    }
  }
  return cfg;
}

ConfigMap load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot read config file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

void validate_config_keys(const ConfigMap& cfg) {
  for (const auto& [key, value] : cfg) {
    bool known = false;
    for (const char* k : kKnownKeys) {
      if (key == k) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
}

PolicyConfig policy_config_from(const ConfigMap& cfg) {
  PolicyConfig p;
  p.enabled = get_bool(cfg, "policy.enabled", p.enabled);
  p.candidate_queue = get_str(cfg, "policy.candidate_queue", p.candidate_queue);
  p.scaleup_ratio = get_double(cfg, "policy.scaleup_ratio", p.scaleup_ratio);
  p.idle_timeout_s = get_i64(cfg, "policy.idle_timeout_s", p.idle_timeout_s);
  if (p.scaleup_ratio <= 0.0) {
    throw ConfigError("policy.scaleup_ratio must be > 0");
  }
  if (p.idle_timeout_s < 0) {
    throw ConfigError("policy.idle_timeout_s must be >= 0");
  }
  return p;
}

ProviderConfig provider_config_from(const ConfigMap& cfg) {
  ProviderConfig p;
  p.boot_latency_s = get_i64(cfg, "provider.boot_latency_s", p.boot_latency_s);
  p.launch_stagger_s = get_i64(cfg, "provider.launch_stagger_s", p.launch_stagger_s);
  p.billing_increment_s = get_i64(cfg, "provider.billing_increment_s", p.billing_increment_s);
  p.price_per_increment = get_double(cfg, "provider.price_per_increment", p.price_per_increment);
  p.failure_rate = get_double(cfg, "provider.failure_rate", p.failure_rate);
  p.max_vms = static_cast<int>(get_i64(cfg, "provider.max_vms", p.max_vms));
  p.start_cmd = get_str(cfg, "provider.start_cmd", p.start_cmd);
  p.stop_cmd = get_str(cfg, "provider.stop_cmd", p.stop_cmd);
  p.status_cmd = get_str(cfg, "provider.status_cmd", p.status_cmd);
  return p;
}

DaemonConfig daemon_config_from(const ConfigMap& cfg) {
  validate_config_keys(cfg);
  DaemonConfig d;
  d.policy = policy_config_from(cfg);
  d.provider = provider_config_from(cfg);
  d.poll_cmd = get_str(cfg, "scheduler.poll_cmd", "");
  if (d.poll_cmd.empty()) {
    throw ConfigError("scheduler.poll_cmd is required");
  }
  d.poll_interval_s = get_i64(cfg, "orchestrator.poll_interval_s", d.poll_interval_s);
  if (d.poll_interval_s < 0) {
    throw ConfigError("orchestrator.poll_interval_s must be >= 0");
  }
  d.workdir = get_str(cfg, "orchestrator.workdir", d.workdir);
  d.cluster_size = static_cast<int>(get_i64(cfg, "orchestrator.cluster_size", d.cluster_size));
  d.max_ticks = static_cast<std::uint64_t>(get_i64(cfg, "orchestrator.max_ticks", 0));
  return d;
}

}  // namespace burst
