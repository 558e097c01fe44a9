/*
 * Copyright 2026 The mcdrr-sim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MCDRR_TIME_HPP
#define MCDRR_TIME_HPP

#include <compare>
#include <cstdint>

namespace mcdrr {

/// Simulated time in integer picoseconds since simulation start.
///
/// An integer clock keeps long runs drift-free and makes determinism
/// bit-exact. At 1 Gb/s one byte is exactly 8000 ps, so all frame
/// durations in the reference scenarios are exact.
struct SimTime {
  std::uint64_t ps = 0;

  constexpr auto operator<=>(const SimTime&) const = default;

  constexpr SimTime operator+(SimTime o) const { return SimTime{ps + o.ps}; }
  constexpr SimTime operator-(SimTime o) const { return SimTime{ps - o.ps}; }
  constexpr SimTime& operator+=(SimTime o) {
    ps += o.ps;
    return *this;
  }

  static constexpr SimTime from_ps(std::uint64_t v) { return SimTime{v}; }
  static constexpr SimTime from_ns(std::uint64_t v) { return SimTime{v * 1000ULL}; }
  static constexpr SimTime from_us(std::uint64_t v) { return SimTime{v * 1000000ULL}; }
  static constexpr SimTime from_ms(std::uint64_t v) { return SimTime{v * 1000000000ULL}; }
  static constexpr SimTime from_s(std::uint64_t v) { return SimTime{v * 1000000000000ULL}; }

  constexpr double seconds() const { return static_cast<double>(ps) * 1e-12; }
  constexpr double nanoseconds() const { return static_cast<double>(ps) * 1e-3; }
};

}  // namespace mcdrr

#endif  // MCDRR_TIME_HPP
