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

#ifndef MCDRR_TRAFFIC_HPP
#define MCDRR_TRAFFIC_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "mcdrr/time.hpp"

namespace mcdrr {

/// Frame size distribution: integer uniform on [min, max] inclusive, or a
/// fixed size (min == max).
struct SizeDist {
  enum class Kind : std::uint8_t { kUniform, kFixed };

  Kind kind = Kind::kUniform;
  std::uint32_t min_bytes = 64;
  std::uint32_t max_bytes = 1518;

  static SizeDist uniform(std::uint32_t min, std::uint32_t max) {
    return SizeDist{Kind::kUniform, min, max};
  }
  static SizeDist fixed(std::uint32_t bytes) {
    return SizeDist{Kind::kFixed, bytes, bytes};
  }

  double mean_bytes() const {
    return (static_cast<double>(min_bytes) + static_cast<double>(max_bytes)) /
           2.0;
  }
};

/// One flow: a renewal process of frames destined to a single channel.
/// Flows map one-to-one onto channels, so flow_id doubles as channel_id.
struct FlowSpec {
  std::uint32_t flow_id = 0;
  SimTime mean_interframe;
  SizeDist size;
};

/// Per-flow pseudorandom stream, split deterministically from the master
/// seed so each flow's sequence is independent of evaluation order.
/// mt19937_64 is fully specified by the standard, so identical
/// (master_seed, flow_id) reproduce identical draws everywhere.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint32_t flow_id);

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in (0, 1], 53-bit resolution. Never returns 0 so
  /// log() stays finite.
  double next_unit();

  /// Exact integer uniform on [0, bound), bias-free (rejection method).
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::mt19937_64 gen_;
};

/// Exponential interframe gap with the flow's mean, via inverse CDF
/// (-mean * ln(u)), rounded to integer picoseconds, floored at 1 ps.
SimTime sample_interframe(const FlowSpec& spec, RngStream& rng);

/// Frame size draw for the flow's distribution.
std::uint32_t sample_frame_size(const FlowSpec& spec, RngStream& rng);

/// Sixteen flows, all uniform 64-1518 byte frames; flow 0 at a 16 us mean
/// interframe gap, flows 1-15 at 48 us (flow 0 offers 4x the rest).
std::vector<FlowSpec> scenario_a_flows();

/// Sixteen flows with fixed frame sizes: flow 0 sends 1000-byte frames
/// every 16 us on average, flows 1-15 send 500-byte frames every 32 us.
std::vector<FlowSpec> scenario_b_flows();

}  // namespace mcdrr

#endif  // MCDRR_TRAFFIC_HPP
