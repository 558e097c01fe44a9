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

#include "mcdrr/metrics.hpp"

#include <stdexcept>

#include "mcdrr/check.hpp"

namespace mcdrr {

double throughput_bps(const FlowStats& stats, SimTime duration) {
  if (duration.ps == 0) {
    throw std::invalid_argument("throughput over a zero-length window");
  }
  return static_cast<double>(stats.bytes_delivered) * 8.0 / duration.seconds();
}

double jain_index(std::span<const double> values) {
  double sum = 0.0;
  double sum_sq = 0.0;
  for (const double x : values) {
    if (x < 0.0) {
      throw std::domain_error("jain_index: negative value");
    }
    sum += x;
    sum_sq += x * x;
  }
  if (values.empty() || sum_sq == 0.0) {
    throw std::domain_error("jain_index: needs at least one positive value");
  }
  return (sum * sum) / (static_cast<double>(values.size()) * sum_sq);
}

double offered_load_bps(const std::vector<FlowSpec>& flows,
                        std::uint32_t ifg_bytes) {
  double total = 0.0;
  for (const FlowSpec& f : flows) {
    const double bytes = f.size.mean_bytes() + static_cast<double>(ifg_bytes);
    total += bytes * 8.0 / f.mean_interframe.seconds();
  }
  return total;
}

void Metrics::record_delivered(const Frame& frame, SimTime now) {
  MCDRR_CHECK(frame.channel_id < flows_.size());
  FlowStats& s = flows_[frame.channel_id];
  ++s.frames_delivered;
  s.bytes_delivered += frame.size_bytes;
  MCDRR_CHECK(now >= frame.t_created);
  s.sum_delay_ps += (now - frame.t_created).ps;
}

std::uint64_t Metrics::total_generated() const {
  std::uint64_t n = 0;
  for (const auto& f : flows_) n += f.frames_generated;
  return n;
}

std::uint64_t Metrics::total_delivered() const {
  std::uint64_t n = 0;
  for (const auto& f : flows_) n += f.frames_delivered;
  return n;
}

std::uint64_t Metrics::total_dropped() const {
  std::uint64_t n = 0;
  for (const auto& f : flows_) n += f.frames_dropped;
  return n;
}

std::uint64_t Metrics::total_bytes_delivered() const {
  std::uint64_t n = 0;
  for (const auto& f : flows_) n += f.bytes_delivered;
  return n;
}

}  // namespace mcdrr
