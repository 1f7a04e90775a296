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

#include "burst/clock.hpp"

#include <ctime>

#include "burst/errors.hpp"

namespace burst {

Clock Clock::real() {
  return Clock(ClockMode::Real, static_cast<Timestamp>(std::time(nullptr)), 0);
}

Clock Clock::virtual_at(Timestamp start, std::int64_t step) {
  if (step < 1) {
    throw ConfigError("virtual clock step must be >= 1 second");
  }
  return Clock(ClockMode::Virtual, start, step);
}

Timestamp Clock::tick_start() {
  if (mode_ == ClockMode::Real) {
    auto sys = static_cast<Timestamp>(std::time(nullptr));
    if (sys > now_) {
      now_ = sys;
    }
  }
  return now_;
}

void Clock::tick_end() {
  if (mode_ == ClockMode::Virtual) {
    now_ += step_;
  }
}

}  // namespace burst
