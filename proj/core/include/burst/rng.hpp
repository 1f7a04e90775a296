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
#include <random>
#include <string_view>

namespace burst {

// Seeded draws must produce identical results on every platform, so the
// implementation-defined std::uniform_*_distribution adapters are avoided.

/// Uniform draw in [lo, hi] via 128-bit multiply-shift on a raw engine output.
inline std::int64_t uniform_i64(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  auto range = static_cast<std::uint64_t>(hi - lo) + 1u;
  if (range == 0) {  // full 64-bit span
    return static_cast<std::int64_t>(rng());
  }
  auto x = static_cast<unsigned __int128>(rng()) * range;
  return lo + static_cast<std::int64_t>(x >> 64);
}

/// Uniform draw in [0, 1) with 53 bits of precision.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// FNV-1a over (seed, key), folded to [0, 1). Deterministic per-key noise,
/// e.g. the simulated provider's boot-failure decision.
inline double hash_unit(std::uint64_t seed, std::string_view key) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](unsigned char b) {
    h ^= b;
    h *= 1099511628211ull;
  };
  for (int i = 0; i < 8; ++i) {
    mix(static_cast<unsigned char>(seed >> (8 * i)));
  }
  for (unsigned char c : key) {
    mix(c);
  }
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace burst
