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

#include "burst/time.hpp"

namespace burst {

enum class ClockMode { Real, Virtual };

/// Monotone tick clock. In VIRTUAL mode `now` advances by exactly `step` per
/// tick; in REAL mode it follows the system clock, clamped so that observed
/// values never decrease.
class Clock {
 public:
  static Clock real();
  static Clock virtual_at(Timestamp start, std::int64_t step);

  Timestamp now() const { return now_; }
  ClockMode mode() const { return mode_; }
  std::int64_t step() const { return step_; }

  /// Refreshes `now` in REAL mode; a no-op in VIRTUAL mode. Returns `now`.
  Timestamp tick_start();

  /// Advances `now` by `step` in VIRTUAL mode; a no-op in REAL mode.
  void tick_end();

 private:
  Clock(ClockMode mode, Timestamp start, std::int64_t step)
      : mode_(mode), now_(start), step_(step) {}

  ClockMode mode_;
  Timestamp now_;
  std::int64_t step_;
};

}  // namespace burst
