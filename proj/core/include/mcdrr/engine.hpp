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

#ifndef MCDRR_ENGINE_HPP
#define MCDRR_ENGINE_HPP

#include <cstdint>

#include "mcdrr/event.hpp"
#include "mcdrr/time.hpp"

namespace mcdrr {

class Engine;

/// Receiver side of event dispatch. Handlers may schedule further events
/// on the engine while handling one (arrivals schedule the next arrival,
/// sends schedule their completion).
class EventHandler {
 public:
  virtual ~EventHandler() = default;
  virtual void on_flow_arrival(Engine& engine, std::uint32_t flow_id,
                               SimTime now) = 0;
  virtual void on_tx_completion(Engine& engine, std::uint32_t transmitter_id,
                                std::uint32_t channel_id, SimTime now) = 0;
};

/// Per-run() dispatch counts by event kind.
struct RunSummary {
  std::uint64_t arrivals = 0;
  std::uint64_t completions = 0;
  SimTime end_clock;

  std::uint64_t total() const { return arrivals + completions; }
};

/// Deterministic single-threaded discrete-event engine.
///
/// A single instance owns the simulated clock and the pending-event queue.
/// Two runs fed identical inputs dispatch a byte-identical event sequence.
class Engine {
 public:
  SimTime now() const { return clock_; }

  /// Scheduling in the past is a logic bug, not a user error.
  void schedule_flow_arrival(SimTime t, std::uint32_t flow_id);
  void schedule_tx_completion(SimTime t, std::uint32_t transmitter_id,
                              std::uint32_t channel_id);

  /// Dispatches pending events in (time, kind, seq) order until the queue
  /// is empty or the next event lies beyond `until`. Resumable: the clock
  /// holds the last dispatched timestamp. Returns counts for this call.
  RunSummary run(SimTime until, EventHandler& handler);

  std::size_t pending() const { return queue_.size(); }
  std::uint64_t scheduled_total() const { return queue_.inserted(); }
  std::uint64_t dispatched_total() const { return dispatched_; }

 private:
  EventQueue queue_;
  SimTime clock_;
  std::uint64_t dispatched_ = 0;
};

}  // namespace mcdrr

#endif  // MCDRR_ENGINE_HPP
