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

#ifndef MCDRR_EVENT_HPP
#define MCDRR_EVENT_HPP

#include <cstdint>
#include <queue>
#include <tuple>
#include <vector>

#include "mcdrr/time.hpp"

namespace mcdrr {

/// Event classes, in tie-break order: completions dispatch before arrivals
/// at equal timestamps so transmitters and channels are released before new
/// work is considered.
enum class EventKind : std::uint8_t {
  kTxCompletion = 0,
  kFlowArrival = 1,
};

/// A timestamped simulation event. `seq` is a global insertion counter that
/// makes the ordering key (time, kind, seq) a strict total order.
struct Event {
  SimTime time;
  EventKind kind = EventKind::kFlowArrival;
  std::uint32_t a = 0;  // arrival: flow id / completion: transmitter id
  std::uint32_t b = 0;  // completion: channel id
  std::uint64_t seq = 0;

  std::uint32_t flow_id() const { return a; }
  std::uint32_t transmitter_id() const { return a; }
  std::uint32_t channel_id() const { return b; }
};

/// Min-ordered pending-event set keyed by (time, kind, seq).
class EventQueue {
 public:
  void push(SimTime time, EventKind kind, std::uint32_t a, std::uint32_t b) {
    heap_.push(Event{time, kind, a, b, next_seq_++});
  }

  const Event& top() const { return heap_.top(); }

  Event pop() {
    Event e = heap_.top();
    heap_.pop();
    return e;
  }

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

  /// Total events ever inserted; also the next seq to be assigned.
  std::uint64_t inserted() const { return next_seq_; }

 private:
  struct After {
    bool operator()(const Event& x, const Event& y) const {
      return std::tie(x.time.ps, x.kind, x.seq) >
             std::tie(y.time.ps, y.kind, y.seq);
    }
  };

  std::priority_queue<Event, std::vector<Event>, After> heap_;
  std::uint64_t next_seq_ = 0;
};

}  // namespace mcdrr

#endif  // MCDRR_EVENT_HPP
