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

#include "burst/workload.hpp"

#include <fmt/format.h>

#include "burst/errors.hpp"
#include "burst/rng.hpp"

namespace burst {

std::vector<AccountingRecord> generate_workload(const SyntheticWorkloadSpec& spec) {
  if (spec.n_jobs < 0) {
    throw ConfigError("n_jobs must be >= 0");
  }
  if (spec.duration_min_s < 0 || spec.duration_min_s > spec.duration_max_s) {
    throw ConfigError("workload durations need 0 <= duration_min <= duration_max");
  }
  if (spec.candidate_fraction < 0.0 || spec.candidate_fraction > 1.0) {
    throw ConfigError("candidate_fraction must be in [0, 1]");
  }
  if (spec.burst_spacing_s < 0) {
    throw ConfigError("burst_spacing must be >= 0");
  }

  const int bursts = spec.burst_count > 0 ? spec.burst_count : 1;
  std::mt19937_64 rng(spec.seed);
  std::vector<AccountingRecord> records;
  records.reserve(static_cast<std::size_t>(spec.n_jobs));

  for (int i = 0; i < spec.n_jobs; ++i) {
    // Contiguous blocks: job i belongs to burst floor(i * bursts / n_jobs),
    // so submit times are nondecreasing by construction.
    auto burst = static_cast<std::int64_t>(i) * bursts / spec.n_jobs;
    AccountingRecord rec;
    rec.job_id = fmt::format("j{:06}", i + 1);
    rec.submit_time = spec.start_time + burst * spec.burst_spacing_s;
    rec.duration_s = uniform_i64(rng, spec.duration_min_s, spec.duration_max_s);
    rec.queue = uniform_unit(rng) < spec.candidate_fraction ? spec.candidate_queue
                                                            : spec.default_queue;
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace burst
