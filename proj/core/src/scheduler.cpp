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

#include "mcdrr/scheduler.hpp"

#include <utility>

#include "mcdrr/check.hpp"

namespace mcdrr {

Scheduler::Scheduler(std::uint32_t num_channels, SchedulerConfig config)
    : config_(std::move(config)),
      current_queue_index_(num_channels - 1) {
  MCDRR_CHECK(num_channels >= 1);
  MCDRR_CHECK(config_.voq_capacity >= 1);
  voqs_.resize(num_channels);
  if (config_.quanta.empty()) {
    config_.quanta.assign(num_channels, 1518);
  } else if (config_.quanta.size() == 1) {
    config_.quanta.assign(num_channels, config_.quanta[0]);
  }
  MCDRR_CHECK(config_.quanta.size() == num_channels);
  for (std::uint32_t q = 0; q < num_channels; ++q) {
    MCDRR_CHECK(config_.quanta[q] >= 1);
    voqs_[q].quantum = config_.quanta[q];
  }
}

EnqueueOutcome Scheduler::enqueue(std::uint32_t channel_id, Frame frame) {
  MCDRR_CHECK(channel_id < voqs_.size());
  Voq& voq = voqs_[channel_id];
  if (voq.frames.size() >= config_.voq_capacity) {
    ++voq.drops;
    return EnqueueOutcome::kDropped;
  }
  voq.frames.push_back(std::move(frame));
  return EnqueueOutcome::kAccepted;
}

EnqueueOutcome Scheduler::on_arrival(Engine& engine, Link& link,
                                     std::uint32_t channel_id, Frame frame,
                                     SimTime now) {
  last_event_time_ = now;
  const EnqueueOutcome outcome = enqueue(channel_id, std::move(frame));
  if (outcome == EnqueueOutcome::kDropped) {
    return outcome;  // a dropped frame never triggers scheduling
  }
  // One dequeue per accepted arrival, and only when a transmitter is idle.
  // Further idle transmitters are re-engaged by later arrivals/departures.
  if (const auto tx = link.acquire_transmitter()) {
    if (const auto result = select()) {
      send_head(engine, link, result->channel, *tx, now);
    }
  }
  return outcome;
}

void Scheduler::on_departure(Engine& engine, Link& link,
                             std::uint32_t channel_id,
                             std::uint32_t transmitter_id, SimTime now) {
  last_event_time_ = now;
  MCDRR_CHECK(channel_id < voqs_.size());
  Voq& voq = voqs_[channel_id];
  MCDRR_CHECK_MSG(voq.num_scheduled > 0,
                  "departure on channel " << channel_id
                                          << " with nothing scheduled");
  MCDRR_CHECK_MSG(!voq.frames.empty(), "departure from an empty VOQ");

  link.end_transmission(transmitter_id, channel_id, now);

  Frame delivered = std::move(voq.frames.front());
  voq.frames.pop_front();
  --voq.num_scheduled;
  delivered.t_delivered = now;
  if (sink_ != nullptr) {
    sink_->frame_delivered(delivered, now);
  }

  // A drained queue forfeits its leftover deficit. The pop above is the
  // only transition that can empty a VOQ.
  if (voq.frames.empty()) {
    MCDRR_CHECK(voq.num_scheduled == 0);
    if (voq.deficit != 0) {
      voq.deficit = 0;
      if (observer_ != nullptr) {
        observer_->on_deficit_reset(channel_id, now);
      }
    }
  }

  if (voq.num_scheduled > 0) {
    // Committed batch continues back-to-back on the same channel and
    // transmitter.
    send_head(engine, link, channel_id, transmitter_id, now);
    return;
  }
  if (const auto result = select()) {
    send_head(engine, link, result->channel, transmitter_id, now);
  }
  // Otherwise the transmitter goes idle until the next arrival.
}

std::optional<DequeueResult> Scheduler::dequeue() {
  const std::uint32_t num_queues = static_cast<std::uint32_t>(voqs_.size());
  const std::uint32_t start = (current_queue_index_ + 1) % num_queues;
  ++scan_stats_.dequeue_calls;
  std::uint32_t visited = 0;

  for (std::uint32_t i = 0; i < num_queues; ++i) {
    const std::uint32_t idx = (start + i) % num_queues;
    Voq& voq = voqs_[idx];
    if (voq.frames.empty()) {
      continue;
    }
    ++visited;
    if (config_.accrue_quantum_when_busy || voq.num_scheduled == 0) {
      voq.deficit += voq.quantum;
    }
    if (voq.num_scheduled != 0) {
      // Channel still serving a previous round; keep the accrued deficit.
      if (observer_ != nullptr) {
        observer_->on_skip_busy(idx, voq.deficit, last_event_time_);
      }
      continue;
    }
    const std::int64_t hol =
        static_cast<std::int64_t>(voq.frames.front().size_bytes);
    if (voq.deficit < hol) {
      if (observer_ != nullptr) {
        observer_->on_skip_deficit(idx, voq.deficit,
                                   voq.frames.front().size_bytes,
                                   last_event_time_);
      }
      continue;
    }

    // Serve: commit head frames while the deficit covers the next one.
    current_queue_index_ = idx;
    std::uint32_t scheduled = 0;
    while (scheduled < voq.frames.size() &&
           (config_.max_packets_per_visit == 0 ||
            scheduled < config_.max_packets_per_visit)) {
      const std::int64_t size =
          static_cast<std::int64_t>(voq.frames[scheduled].size_bytes);
      if (voq.deficit < size) {
        break;
      }
      voq.deficit -= size;
      MCDRR_CHECK(voq.deficit >= 0);
      ++scheduled;
    }
    MCDRR_CHECK(scheduled >= 1);
    voq.num_scheduled = scheduled;

    scan_stats_.queues_visited += visited;
    if (visited > scan_stats_.max_scan_length) {
      scan_stats_.max_scan_length = visited;
    }
    if (observer_ != nullptr) {
      observer_->on_serve(idx, scheduled, voq.deficit, last_event_time_);
    }
    return DequeueResult{idx, scheduled};
  }

  scan_stats_.queues_visited += visited;
  if (visited > scan_stats_.max_scan_length) {
    scan_stats_.max_scan_length = visited;
  }
  return std::nullopt;
}

std::optional<DequeueResult> Scheduler::baseline_rr_dequeue() {
  const std::uint32_t num_queues = static_cast<std::uint32_t>(voqs_.size());
  const std::uint32_t start = (current_queue_index_ + 1) % num_queues;
  ++scan_stats_.dequeue_calls;
  std::uint32_t visited = 0;

  for (std::uint32_t i = 0; i < num_queues; ++i) {
    const std::uint32_t idx = (start + i) % num_queues;
    Voq& voq = voqs_[idx];
    if (voq.frames.empty()) {
      continue;
    }
    ++visited;
    if (voq.num_scheduled != 0) {
      if (observer_ != nullptr) {
        observer_->on_skip_busy(idx, voq.deficit, last_event_time_);
      }
      continue;
    }
    current_queue_index_ = idx;
    voq.num_scheduled = 1;
    scan_stats_.queues_visited += visited;
    if (visited > scan_stats_.max_scan_length) {
      scan_stats_.max_scan_length = visited;
    }
    if (observer_ != nullptr) {
      observer_->on_serve(idx, 1, voq.deficit, last_event_time_);
    }
    return DequeueResult{idx, 1};
  }

  scan_stats_.queues_visited += visited;
  if (visited > scan_stats_.max_scan_length) {
    scan_stats_.max_scan_length = visited;
  }
  return std::nullopt;
}

std::optional<DequeueResult> Scheduler::select() {
  return config_.policy == SchedulerPolicy::kMcdrr ? dequeue()
                                                   : baseline_rr_dequeue();
}

void Scheduler::send_head(Engine& engine, Link& link, std::uint32_t channel_id,
                          std::uint32_t transmitter_id, SimTime now) {
  Voq& voq = voqs_[channel_id];
  MCDRR_CHECK(!voq.frames.empty());
  MCDRR_CHECK(voq.num_scheduled >= 1);
  Frame& frame = voq.frames.front();
  const SimTime done =
      link.begin_transmission(frame, channel_id, transmitter_id, now);
  engine.schedule_tx_completion(done, transmitter_id, channel_id);
  if (observer_ != nullptr) {
    observer_->on_send(channel_id, frame.id, frame.size_bytes, transmitter_id,
                       now);
  }
}

}  // namespace mcdrr
