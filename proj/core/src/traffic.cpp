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

#include "mcdrr/traffic.hpp"

#include <cmath>

#include "mcdrr/check.hpp"

namespace mcdrr {
namespace {

// splitmix64; decorrelates the per-flow seeds derived from one master seed.
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint32_t flow_id)
    : gen_(mix64(master_seed ^ mix64(0xF10BA11ULL + flow_id))) {}

double RngStream::next_unit() {
  // ((x >> 11) + 1) / 2^53 lies in (0, 1].
  const std::uint64_t mantissa = (gen_() >> 11) + 1;
  return static_cast<double>(mantissa) * 0x1.0p-53;
}

std::uint64_t RngStream::next_below(std::uint64_t bound) {
  MCDRR_CHECK(bound >= 1);
  // Rejection below the largest multiple of bound; no modulo bias.
  const std::uint64_t limit = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t x = gen_();
    if (x >= limit) {
      return x % bound;
    }
  }
}

SimTime sample_interframe(const FlowSpec& spec, RngStream& rng) {
  const double mean_ps = static_cast<double>(spec.mean_interframe.ps);
  const double gap = -mean_ps * std::log(rng.next_unit());
  const long long rounded = std::llround(gap);
  return SimTime{rounded < 1 ? 1ULL : static_cast<std::uint64_t>(rounded)};
}

std::uint32_t sample_frame_size(const FlowSpec& spec, RngStream& rng) {
  const SizeDist& d = spec.size;
  if (d.kind == SizeDist::Kind::kFixed || d.min_bytes == d.max_bytes) {
    return d.min_bytes;
  }
  const std::uint64_t range =
      static_cast<std::uint64_t>(d.max_bytes) - d.min_bytes + 1;
  return d.min_bytes + static_cast<std::uint32_t>(rng.next_below(range));
}

std::vector<FlowSpec> scenario_a_flows() {
  std::vector<FlowSpec> flows;
  flows.reserve(16);
  for (std::uint32_t i = 0; i < 16; ++i) {
    flows.push_back(FlowSpec{
        i,
        i == 0 ? SimTime::from_us(16) : SimTime::from_us(48),
        SizeDist::uniform(64, 1518),
    });
  }
  return flows;
}

std::vector<FlowSpec> scenario_b_flows() {
  std::vector<FlowSpec> flows;
  flows.reserve(16);
  for (std::uint32_t i = 0; i < 16; ++i) {
    flows.push_back(FlowSpec{
        i,
        i == 0 ? SimTime::from_us(16) : SimTime::from_us(32),
        i == 0 ? SizeDist::fixed(1000) : SizeDist::fixed(500),
    });
  }
  return flows;
}

}  // namespace mcdrr
