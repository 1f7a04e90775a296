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
#include <string_view>
#include <vector>

#include "burst/time.hpp"

namespace burst {

/// One row of historical batch-system accounting data.
struct AccountingRecord {
  std::string job_id;
  Timestamp submit_time = 0;
  std::int64_t duration_s = 0;
  std::string queue;
};

/// Parses accounting CSV: `job_id,submit_time,duration_s,queue`, exactly four
/// columns. An optional first header line is detected by a non-numeric second
/// field; `#` comment lines, blank lines and trailing CR are skipped. Records
/// must arrive with nondecreasing submit_time (OrderError otherwise) and
/// unique job ids. Zero-duration jobs are legal.
std::vector<AccountingRecord> parse_accounting(std::string_view text);

/// Inverse of parse_accounting: header line plus one row per record.
std::string serialize_accounting(const std::vector<AccountingRecord>& records);

std::vector<AccountingRecord> load_accounting_file(const std::string& path);

}  // namespace burst
