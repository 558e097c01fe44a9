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

#ifndef MCDRR_SCHEDULER_HPP
#define MCDRR_SCHEDULER_HPP

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "mcdrr/engine.hpp"
#include "mcdrr/link.hpp"
#include "mcdrr/time.hpp"

namespace mcdrr {

enum class EnqueueOutcome : std::uint8_t {
  kAccepted,
  kDropped,  // tail drop on a full VOQ; a normal outcome, not an error
};

enum class SchedulerPolicy : std::uint8_t {
  kMcdrr,       // deficit round-robin over channels, overlapping rounds
  kRrBaseline,  // same rotation, no deficit, one frame per visit
};

/// One virtual output queue per channel.
///
/// Frames stay in the queue until their transmission completes; the first
/// `num_scheduled` frames are exactly those committed to transmission
/// ("scheduled") by past dequeue visits. The head frame is the one on the
/// wire whenever the channel is busy.
struct Voq {
  std::deque<Frame> frames;
  std::int64_t deficit = 0;        // DC: byte budget carried across rounds
  std::int64_t quantum = 1518;     // Q: bytes credited per visit
  std::uint32_t num_scheduled = 0; // scheduled-but-not-completed frames
  std::uint64_t drops = 0;
};

/// Outcome of one successful dequeue scan.
struct DequeueResult {
  std::uint32_t channel = 0;
  std::uint32_t frames_scheduled = 0;  // >= 1
};

struct SchedulerConfig {
  SchedulerPolicy policy = SchedulerPolicy::kMcdrr;
  std::vector<std::int64_t> quanta;        // per queue; broadcast if size 1
  std::uint32_t voq_capacity = 1000;       // frames per VOQ
  std::uint32_t max_packets_per_visit = 0; // 0 = unlimited
  bool accrue_quantum_when_busy = true;
};

/// Delivery hook; receives each frame as its transmission completes.
class DeliverySink {
 public:
  virtual ~DeliverySink() = default;
  virtual void frame_delivered(const Frame& frame, SimTime now) = 0;
};

/// Optional scan instrumentation for tests and traces. All callbacks refer
/// to one dequeue scan or one physical send.
class SchedulerObserver {
 public:
  virtual ~SchedulerObserver() = default;
  virtual void on_serve(std::uint32_t /*queue*/,
                        std::uint32_t /*frames_scheduled*/,
                        std::int64_t /*deficit_after*/, SimTime /*now*/) {}
  virtual void on_skip_deficit(std::uint32_t /*queue*/,
                               std::int64_t /*deficit*/,
                               std::uint32_t /*hol_bytes*/, SimTime /*now*/) {}
  virtual void on_skip_busy(std::uint32_t /*queue*/, std::int64_t /*deficit*/,
                            SimTime /*now*/) {}
  virtual void on_send(std::uint32_t /*queue*/, std::uint64_t /*frame_id*/,
                       std::uint32_t /*size_bytes*/,
                       std::uint32_t /*transmitter*/, SimTime /*start*/) {}
  virtual void on_deficit_reset(std::uint32_t /*queue*/, SimTime /*now*/) {}
};

/// Aggregate scan-cost counters. The rotation examines at most W queues
/// per dequeue; these report what it actually did.
struct ScanStats {
  std::uint64_t dequeue_calls = 0;
  std::uint64_t queues_visited = 0;
  std::uint32_t max_scan_length = 0;
};

/// Multi-channel deficit round-robin over per-channel VOQs.
///
/// The rotation pointer sweeps the queues; each visit credits a backlogged
/// queue with its quantum, and a queue is served only when no previous
/// commitment is outstanding on its channel (num_scheduled == 0) and the
/// deficit covers the head-of-line frame. A served visit commits as many
/// head frames as the deficit allows; those frames then leave back-to-back
/// on the queue's channel while the rotation moves on, so successive rounds
/// overlap across channels. A skipped queue keeps its accrued deficit, and
/// a queue that drains to empty forfeits it.
class Scheduler {
 public:
  Scheduler(std::uint32_t num_channels, SchedulerConfig config);

  /// Appends to the VOQ tail, or tail-drops when the queue is at capacity.
  EnqueueOutcome enqueue(std::uint32_t channel_id, Frame frame);

  /// Arrival path: enqueue, then run one dequeue if a transmitter is idle.
  EnqueueOutcome on_arrival(Engine& engine, Link& link,
                            std::uint32_t channel_id, Frame frame,
                            SimTime now);

  /// Departure path: pop the delivered head, then either continue the
  /// committed batch on this channel or start a new dequeue scan.
  void on_departure(Engine& engine, Link& link, std::uint32_t channel_id,
                    std::uint32_t transmitter_id, SimTime now);

  /// One MCDRR scan. Examines up to W queues starting one past the
  /// rotation pointer; commits a batch on the first eligible queue whose
  /// deficit covers its head frame. Mutates deficits of visited queues.
  std::optional<DequeueResult> dequeue();

  /// Deficit-free contrast baseline: same rotation, first eligible
  /// non-empty queue, exactly one frame per visit.
  std::optional<DequeueResult> baseline_rr_dequeue();

  void set_delivery_sink(DeliverySink* sink) { sink_ = sink; }
  void set_observer(SchedulerObserver* observer) { observer_ = observer; }

  // State accessors (tests, audits, reports).
  std::uint32_t num_queues() const {
    return static_cast<std::uint32_t>(voqs_.size());
  }
  std::size_t queue_length(std::uint32_t q) const {
    return voqs_[q].frames.size();
  }
  std::int64_t deficit(std::uint32_t q) const { return voqs_[q].deficit; }
  std::int64_t quantum(std::uint32_t q) const { return voqs_[q].quantum; }
  std::uint32_t scheduled_count(std::uint32_t q) const {
    return voqs_[q].num_scheduled;
  }
  std::uint64_t drops(std::uint32_t q) const { return voqs_[q].drops; }
  std::uint32_t current_queue_index() const { return current_queue_index_; }
  const Frame* head(std::uint32_t q) const {
    return voqs_[q].frames.empty() ? nullptr : &voqs_[q].frames.front();
  }
  const SchedulerConfig& config() const { return config_; }
  const ScanStats& scan_stats() const { return scan_stats_; }

 private:
  std::optional<DequeueResult> select();
  void send_head(Engine& engine, Link& link, std::uint32_t channel_id,
                 std::uint32_t transmitter_id, SimTime now);

  SchedulerConfig config_;
  std::vector<Voq> voqs_;
  // Initialized to W-1 so the first scan starts at queue 0.
  std::uint32_t current_queue_index_;
  DeliverySink* sink_ = nullptr;
  SchedulerObserver* observer_ = nullptr;
  ScanStats scan_stats_;
  SimTime last_event_time_;  // observer timestamps only
};

}  // namespace mcdrr

#endif  // MCDRR_SCHEDULER_HPP
