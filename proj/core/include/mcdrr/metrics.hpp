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

#ifndef MCDRR_METRICS_HPP
#define MCDRR_METRICS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "mcdrr/link.hpp"
#include "mcdrr/scheduler.hpp"
#include "mcdrr/time.hpp"
#include "mcdrr/traffic.hpp"

namespace mcdrr {

/// Per-flow counters measured at the receiver (and at the enqueue point
/// for drops). At any quiescent instant:
///   generated == delivered + dropped + still queued (incl. in flight).
struct FlowStats {
  std::uint64_t frames_generated = 0;
  std::uint64_t frames_delivered = 0;
  std::uint64_t frames_dropped = 0;
  std::uint64_t bytes_delivered = 0;
  std::uint64_t sum_delay_ps = 0;  // delivery - creation, accumulated
  // Filled in when a run is closed out:
  std::uint64_t frames_still_queued = 0;
  std::uint64_t frames_in_flight = 0;
};

/// Goodput over the measurement window: frame bytes only, the inter-frame
/// gap is channel overhead and never counts as delivered.
double throughput_bps(const FlowStats& stats, SimTime duration);

/// (sum x)^2 / (n * sum x^2) over non-negative values; 1.0 is perfect
/// fairness. All-zero input has no defined index.
double jain_index(std::span<const double> values);

/// Aggregate offered load: per flow, (mean frame bytes + ifg) * 8 bits over
/// the mean interframe gap. Pass ifg_bytes = 0 for the frame-bytes-only
/// convention; reports publish both.
double offered_load_bps(const std::vector<FlowSpec>& flows,
                        std::uint32_t ifg_bytes);

/// Event-side recorder wired into the simulation as the delivery sink.
class Metrics : public DeliverySink {
 public:
  explicit Metrics(std::uint32_t num_flows) : flows_(num_flows) {}

  void record_generated(std::uint32_t flow_id) {
    ++flows_[flow_id].frames_generated;
  }
  void record_dropped(std::uint32_t flow_id) {
    ++flows_[flow_id].frames_dropped;
  }
  void record_delivered(const Frame& frame, SimTime now);

  void frame_delivered(const Frame& frame, SimTime now) override {
    record_delivered(frame, now);
  }

  const FlowStats& flow(std::uint32_t flow_id) const {
    return flows_[flow_id];
  }
  FlowStats& flow_mut(std::uint32_t flow_id) { return flows_[flow_id]; }
  std::uint32_t num_flows() const {
    return static_cast<std::uint32_t>(flows_.size());
  }

  std::uint64_t total_generated() const;
  std::uint64_t total_delivered() const;
  std::uint64_t total_dropped() const;
  std::uint64_t total_bytes_delivered() const;

 private:
  std::vector<FlowStats> flows_;
};

}  // namespace mcdrr

#endif  // MCDRR_METRICS_HPP
