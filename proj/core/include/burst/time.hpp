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
#include <string_view>

namespace burst {

/// Seconds since the Unix epoch, UTC. Integer seconds keep replay bit-reproducible.
using Timestamp = std::int64_t;

/// Days since 1970-01-01 for a proleptic Gregorian calendar date.
std::int64_t days_from_civil(int year, int month, int day);

/// Parses a point in time given either as epoch seconds ("1229390030") or as
/// "YYYY-MM-DD HH:MM:SS [TZ]" where TZ is one of UTC, CET, CEST, a numeric
/// offset (+HH:MM, +HHMM, -HH:MM, -HHMM), or absent (UTC assumed).
/// Throws ConfigError on anything else.
Timestamp parse_timestamp(std::string_view text);

}  // namespace burst
