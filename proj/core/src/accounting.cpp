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

#include "burst/accounting.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <fmt/format.h>

#include "burst/errors.hpp"

namespace burst {

namespace {

constexpr std::string_view kHeader = "job_id,submit_time,duration_s,queue";

bool parse_i64(std::string_view text, std::int64_t& out) {
  if (text.empty()) {
    return false;
  }
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

std::vector<AccountingRecord> parse_accounting(std::string_view text) {
  std::vector<AccountingRecord> records;
  std::unordered_set<std::string> seen_ids;
  bool saw_data_or_header = false;
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
    if (line.empty() || line.front() == '#') {
      continue;
    }

    auto fields = split(line, ',');
    if (fields.size() != 4) {
      throw ParseError(line_no, fmt::format("expected 4 fields, got {}", fields.size()));
    }

    std::int64_t submit = 0;
    if (!parse_i64(fields[1], submit)) {
      // A non-numeric second field on the first content line is the header.
      if (!saw_data_or_header) {
        saw_data_or_header = true;
        continue;
      }
      throw ParseError(line_no, "submit_time is not an integer");
    }
    saw_data_or_header = true;

    AccountingRecord rec;
    rec.job_id = std::string(fields[0]);
    rec.submit_time = submit;
    if (rec.job_id.empty()) {
      throw ParseError(line_no, "empty job_id");
    }
    if (!parse_i64(fields[2], rec.duration_s) || rec.duration_s < 0) {
      throw ParseError(line_no, "duration_s is not a nonnegative integer");
    }
    rec.queue = std::string(fields[3]);

    if (!records.empty() && rec.submit_time < records.back().submit_time) {
      throw OrderError(line_no);
    }
    if (!seen_ids.insert(rec.job_id).second) {
      throw ParseError(line_no, "duplicate job_id '" + rec.job_id + "'");
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::string serialize_accounting(const std::vector<AccountingRecord>& records) {
  std::string out(kHeader);
  out += '\n';
  for (const auto& r : records) {
    out += fmt::format("{},{},{},{}\n", r.job_id, r.submit_time, r.duration_s, r.queue);
  }
  return out;
}

std::vector<AccountingRecord> load_accounting_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot read accounting file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_accounting(buf.str());
}

}  // namespace burst
