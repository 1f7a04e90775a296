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

#include "burst/time.hpp"

#include <charconv>
#include <string>

#include "burst/errors.hpp"

namespace burst {

std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2u) / 5u +
                       static_cast<unsigned>(d) - 1u;
  const unsigned doe = yoe * 365u + yoe / 4u - yoe / 100u + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

namespace {

bool parse_i64(std::string_view text, std::int64_t& out) {
  if (text.empty()) {
    return false;
  }
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

int parse_int_field(std::string_view text, int lo, int hi, const char* what) {
  std::int64_t v = 0;
  if (!parse_i64(text, v) || v < lo || v > hi) {
    throw ConfigError(std::string("bad ") + what + " in timestamp '" + std::string(text) + "'");
  }
  return static_cast<int>(v);
}

int days_in_month(int year, int month) {
  static const int table[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month == 2) {
    bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
    return leap ? 29 : 28;
  }
  return table[month - 1];
}

// "UTC", "CET", "CEST" or a numeric offset (+HH:MM, +HHMM, -HH:MM, -HHMM).
std::int64_t parse_tz_offset(std::string_view tz) {
  if (tz == "UTC") return 0;
  if (tz == "CET") return 3600;
  if (tz == "CEST") return 7200;
  if ((tz.size() == 5 || tz.size() == 6) && (tz[0] == '+' || tz[0] == '-')) {
    int sign = tz[0] == '+' ? 1 : -1;
    std::string_view body = tz.substr(1);
    std::string digits;
    if (body.size() == 5 && body[2] == ':') {
      digits = std::string(body.substr(0, 2)) + std::string(body.substr(3));
    } else if (body.size() == 4) {
      digits = std::string(body);
    } else {
      throw ConfigError("unsupported timezone '" + std::string(tz) + "'");
    }
    int hh = parse_int_field(std::string_view(digits).substr(0, 2), 0, 23, "offset hours");
    int mm = parse_int_field(std::string_view(digits).substr(2, 2), 0, 59, "offset minutes");
    return sign * (hh * 3600 + mm * 60);
  }
  throw ConfigError("unsupported timezone '" + std::string(tz) +
                    "' (use UTC, CET, CEST, a numeric offset, or epoch seconds)");
}

}  // namespace

Timestamp parse_timestamp(std::string_view text) {
  // Trim surrounding whitespace.
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty()) {
    throw ConfigError("empty timestamp");
  }

  std::int64_t epoch = 0;
  if (parse_i64(text, epoch)) {
    return epoch;
  }

  // "YYYY-MM-DD HH:MM:SS [TZ]"
  if (text.size() < 19 || text[4] != '-' || text[7] != '-' || text[10] != ' ' ||
      text[13] != ':' || text[16] != ':') {
    throw ConfigError("unparseable timestamp '" + std::string(text) +
                      "' (expected epoch seconds or 'YYYY-MM-DD HH:MM:SS TZ')");
  }
  int year = parse_int_field(text.substr(0, 4), 1, 9999, "year");
  int month = parse_int_field(text.substr(5, 2), 1, 12, "month");
  int day = parse_int_field(text.substr(8, 2), 1, 31, "day");
  if (day > days_in_month(year, month)) {
    throw ConfigError("bad day of month in timestamp '" + std::string(text) + "'");
  }
  int hour = parse_int_field(text.substr(11, 2), 0, 23, "hour");
  int minute = parse_int_field(text.substr(14, 2), 0, 59, "minute");
  int second = parse_int_field(text.substr(17, 2), 0, 59, "second");

  std::int64_t offset = 0;
  if (text.size() > 19) {
    if (text[19] != ' ') {
      throw ConfigError("unparseable timestamp '" + std::string(text) + "'");
    }
    offset = parse_tz_offset(text.substr(20));
  }

  std::int64_t days = days_from_civil(year, month, day);
  return days * 86400 + hour * 3600 + minute * 60 + second - offset;
}

}  // namespace burst
