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

#ifndef MCDRR_SIMULATION_HPP
#define MCDRR_SIMULATION_HPP

#include <cstdint>
#include <deque>
#include <vector>

#include "mcdrr/engine.hpp"
#include "mcdrr/link.hpp"
#include "mcdrr/metrics.hpp"
#include "mcdrr/report.hpp"
#include "mcdrr/scenario.hpp"
#include "mcdrr/scheduler.hpp"
#include "mcdrr/traffic.hpp"

namespace mcdrr {

/// One externally decided arrival, for tests that need exact traffic.
struct ScriptedArrival {
  SimTime time;
  std::uint32_t flow_id = 0;
  std::uint32_t size_bytes = 0;
};

struct SimulationOptions {
  /// Re-verify structural invariants after every dispatched event
  /// (pairing bijection, busy/scheduled encoding, deficit sanity, frame
  /// conservation, per-flow FIFO, per-channel non-overlap). Failure throws
  /// InternalError. Costs roughly O(W) per event.
  bool audit = false;
};

/// Glue that owns one engine, link, scheduler and metrics instance and runs
/// one scenario. Strictly single-threaded; independent instances share
/// nothing, so callers may run many concurrently.
class Simulation final : public EventHandler, public DeliverySink {
 public:
  /// Renewal traffic per the scenario's flow specs.
  explicit Simulation(const ScenarioConfig& config,
                      SimulationOptions options = {});

  /// Scripted traffic; the scenario's flow specs only size the machinery.
  /// Per flow, scripted times must be non-decreasing in script order.
  Simulation(const ScenarioConfig& config, std::vector<ScriptedArrival> script,
             SimulationOptions options = {});

  /// Runs to the configured duration. Events scheduled past it stay pending.
  void run();

  /// Resumable partial run; `until` may not move backwards.
  void run_until(SimTime until);

  /// Dispatches every pending event regardless of the configured duration.
  /// Terminates only for finite traffic (scripted, or renewal after run()).
  void drain();

  // EventHandler
  void on_flow_arrival(Engine& engine, std::uint32_t flow_id,
                       SimTime now) override;
  void on_tx_completion(Engine& engine, std::uint32_t transmitter_id,
                        std::uint32_t channel_id, SimTime now) override;

  // DeliverySink (wired into the scheduler)
  void frame_delivered(const Frame& frame, SimTime now) override;

  /// Assembles the post-run report: per-flow stats over the measurement
  /// window, throughputs, Jain index, offered loads, residual queue state.
  Report report() const;

  Engine& engine() { return engine_; }
  const Engine& engine() const { return engine_; }
  const Link& link() const { return link_; }
  Scheduler& scheduler() { return scheduler_; }
  const Scheduler& scheduler() const { return scheduler_; }
  const Metrics& metrics() const { return metrics_; }
  const ScenarioConfig& config() const { return config_; }

  std::uint64_t frames_created() const { return frames_created_; }
  std::uint64_t frames_delivered_raw() const { return frames_delivered_; }
  std::uint64_t frames_dropped_raw() const { return frames_dropped_; }
  std::uint64_t audit_checks_run() const { return audit_checks_; }

  void set_observer(SchedulerObserver* observer) {
    scheduler_.set_observer(observer);
  }

 private:
  Simulation(const ScenarioConfig& config, std::vector<ScriptedArrival> script,
             SimulationOptions options, bool scripted);

  void prime_renewal_arrivals();
  void audit_invariants(SimTime now);

  ScenarioConfig config_;
  SimulationOptions options_;
  Engine engine_;
  Link link_;
  Scheduler scheduler_;
  Metrics metrics_;

  bool scripted_ = false;
  std::vector<RngStream> streams_;                 // renewal mode
  std::vector<std::deque<std::uint32_t>> script_;  // scripted sizes per flow

  std::uint64_t next_frame_id_ = 0;
  std::uint64_t frames_created_ = 0;
  std::uint64_t frames_delivered_ = 0;
  std::uint64_t frames_dropped_ = 0;
  std::uint64_t audit_checks_ = 0;

  // Audit bookkeeping.
  std::vector<std::uint64_t> last_delivered_id_;  // per flow, FIFO check
  std::vector<SimTime> channel_free_at_;          // per channel, non-overlap
  SimTime last_event_time_;
};

/// Convenience wrapper: build, run, report.
Report run_scenario(const ScenarioConfig& config, SimulationOptions options = {});

}  // namespace mcdrr

#endif  // MCDRR_SIMULATION_HPP
