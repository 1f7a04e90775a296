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
#include <string>
#include <vector>

#include "burst/accounting.hpp"

namespace burst {

/// Parameters for a random test workload. Identical specs generate identical
/// record lists, byte for byte.
struct SyntheticWorkloadSpec {
  std::uint64_t seed = 0;
  int n_jobs = 0;
  int burst_count = 1;             // arrival waves; jobs are split into contiguous blocks
  std::int64_t burst_spacing_s = 0;
  std::int64_t duration_min_s = 0;
  std::int64_t duration_max_s = 0;
  double candidate_fraction = 0.0; // per-job Bernoulli: carry the candidate queue name
  Timestamp start_time = 0;
  std::string candidate_queue = "cloud.q";
  std::string default_queue = "all.q";
};

/// Exactly n_jobs records sorted by submit_time, durations uniform in
/// [duration_min_s, duration_max_s]. Throws ConfigError on an invalid spec.
std::vector<AccountingRecord> generate_workload(const SyntheticWorkloadSpec& spec);

}  // namespace burst
