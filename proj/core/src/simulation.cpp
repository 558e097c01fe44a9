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

#include "mcdrr/simulation.hpp"

#include <limits>
#include <utility>

#include "mcdrr/check.hpp"

namespace mcdrr {

Simulation::Simulation(const ScenarioConfig& config, SimulationOptions options)
    : Simulation(config, {}, options, false) {}

Simulation::Simulation(const ScenarioConfig& config,
                       std::vector<ScriptedArrival> script,
                       SimulationOptions options)
    : Simulation(config, std::move(script), options, true) {}

Simulation::Simulation(const ScenarioConfig& config,
                       std::vector<ScriptedArrival> script,
                       SimulationOptions options, bool scripted)
    : config_(config),
      options_(options),
      link_(config.link),
      scheduler_(config.link.channels, config.scheduler),
      metrics_(config.link.channels),
      scripted_(scripted),
      last_delivered_id_(config.link.channels, 0),
      channel_free_at_(config.link.channels) {
  validate_scenario(config_);
  scheduler_.set_delivery_sink(this);

  if (scripted_) {
    script_.resize(config_.link.channels);
    std::vector<SimTime> last(config_.link.channels);
    for (const ScriptedArrival& a : script) {
      MCDRR_CHECK_MSG(a.flow_id < config_.link.channels,
                      "scripted arrival for unknown flow " << a.flow_id);
      MCDRR_CHECK_MSG(a.size_bytes >= 1, "scripted frame must have a size");
      MCDRR_CHECK_MSG(a.time >= last[a.flow_id],
                      "scripted times must be non-decreasing per flow");
      last[a.flow_id] = a.time;
      script_[a.flow_id].push_back(a.size_bytes);
      engine_.schedule_flow_arrival(a.time, a.flow_id);
    }
  } else {
    prime_renewal_arrivals();
  }
}

void Simulation::prime_renewal_arrivals() {
  streams_.reserve(config_.flows.size());
  for (const FlowSpec& flow : config_.flows) {
    streams_.emplace_back(config_.master_seed, flow.flow_id);
    const SimTime first = sample_interframe(flow, streams_.back());
    if (first <= config_.duration) {
      engine_.schedule_flow_arrival(first, flow.flow_id);
    }
  }
}

void Simulation::run() { run_until(config_.duration); }

void Simulation::run_until(SimTime until) { engine_.run(until, *this); }

void Simulation::drain() {
  engine_.run(SimTime{std::numeric_limits<std::uint64_t>::max()}, *this);
}

void Simulation::on_flow_arrival(Engine& engine, std::uint32_t flow_id,
                                 SimTime now) {
  Frame frame;
  frame.id = ++next_frame_id_;
  frame.channel_id = flow_id;
  frame.t_created = now;
  frame.t_enqueued = now;

  if (scripted_) {
    MCDRR_CHECK_MSG(!script_[flow_id].empty(),
                    "arrival event without a scripted frame");
    frame.size_bytes = script_[flow_id].front();
    script_[flow_id].pop_front();
  } else {
    frame.size_bytes =
        sample_frame_size(config_.flows[flow_id], streams_[flow_id]);
  }

  ++frames_created_;
  const EnqueueOutcome outcome =
      scheduler_.on_arrival(engine, link_, flow_id, frame, now);

  if (now >= config_.warmup) {
    metrics_.record_generated(flow_id);
    if (outcome == EnqueueOutcome::kDropped) {
      metrics_.record_dropped(flow_id);
    }
  }
  if (outcome == EnqueueOutcome::kDropped) {
    ++frames_dropped_;
  }

  if (!scripted_) {
    const SimTime next =
        now + sample_interframe(config_.flows[flow_id], streams_[flow_id]);
    if (next <= config_.duration) {
      engine.schedule_flow_arrival(next, flow_id);
    }
  }

  if (options_.audit) {
    audit_invariants(now);
  }
}

void Simulation::on_tx_completion(Engine& engine,
                                  std::uint32_t transmitter_id,
                                  std::uint32_t channel_id, SimTime now) {
  scheduler_.on_departure(engine, link_, channel_id, transmitter_id, now);
  if (options_.audit) {
    audit_invariants(now);
  }
}

void Simulation::frame_delivered(const Frame& frame, SimTime now) {
  ++frames_delivered_;

  if (options_.audit) {
    const std::uint32_t ch = frame.channel_id;
    MCDRR_CHECK_MSG(frame.id > last_delivered_id_[ch],
                    "out-of-order delivery on channel " << ch);
    last_delivered_id_[ch] = frame.id;

    MCDRR_CHECK(frame.t_tx_start.has_value());
    MCDRR_CHECK_MSG(*frame.t_tx_start >= channel_free_at_[ch],
                    "overlapping transmissions on channel " << ch);
    const SimTime wire = now - *frame.t_tx_start;
    const SimTime nominal = transmission_duration(
        frame.size_bytes, config_.link.ifg_bytes, config_.link.line_rate_bps);
    MCDRR_CHECK_MSG(wire >= nominal &&
                        wire.ps <= nominal.ps + config_.link.tuning_ps,
                    "frame occupied channel " << ch << " for " << wire.ps
                                              << " ps, expected "
                                              << nominal.ps);
    channel_free_at_[ch] = now;
  }

  if (now >= config_.warmup) {
    metrics_.record_delivered(frame, now);
  }
}

void Simulation::audit_invariants(SimTime now) {
  ++audit_checks_;
  MCDRR_CHECK_MSG(now >= last_event_time_, "clock moved backwards");
  last_event_time_ = now;

  MCDRR_CHECK(link_.busy_transmitters() <= config_.link.transmitters);
  MCDRR_CHECK_MSG(link_.busy_channels() == link_.busy_transmitters(),
                  "channel/transmitter busy counts diverge");

  std::uint64_t queued = 0;
  for (std::uint32_t q = 0; q < scheduler_.num_queues(); ++q) {
    const std::size_t len = scheduler_.queue_length(q);
    const std::uint32_t scheduled = scheduler_.scheduled_count(q);
    queued += len;

    MCDRR_CHECK_MSG(scheduled <= len,
                    "queue " << q << " scheduled " << scheduled
                             << " of only " << len << " frames");
    MCDRR_CHECK_MSG(link_.channel_busy(q) == (scheduled > 0),
                    "queue " << q << " busy/scheduled encoding broken");
    MCDRR_CHECK_MSG(scheduler_.deficit(q) >= 0,
                    "queue " << q << " deficit went negative");
    if (len == 0) {
      MCDRR_CHECK_MSG(scheduler_.deficit(q) == 0,
                      "empty queue " << q << " kept a deficit");
    }
    if (link_.channel_busy(q)) {
      const auto tx = link_.channel(q).current_transmitter;
      MCDRR_CHECK(tx.has_value());
      MCDRR_CHECK_MSG(link_.transmitter(*tx).current_channel == q,
                      "pairing mismatch on channel " << q);
    }
  }

  MCDRR_CHECK_MSG(
      frames_created_ == frames_delivered_ + frames_dropped_ + queued,
      "frame conservation broken: created "
          << frames_created_ << ", delivered " << frames_delivered_
          << ", dropped " << frames_dropped_ << ", queued " << queued);
}

Report Simulation::report() const {
  Report report;
  report.scenario = config_;
  report.measured_duration = config_.duration - config_.warmup;

  std::uint64_t residual = 0;
  std::vector<double> throughputs;
  throughputs.reserve(config_.link.channels);

  for (std::uint32_t f = 0; f < config_.link.channels; ++f) {
    FlowReport row;
    row.flow_id = f;
    row.stats = metrics_.flow(f);
    const std::uint64_t len = scheduler_.queue_length(f);
    row.stats.frames_in_flight = link_.channel_busy(f) ? 1 : 0;
    row.stats.frames_still_queued = len - row.stats.frames_in_flight;
    residual += len;

    row.throughput_bps = throughput_bps(row.stats, report.measured_duration);
    if (row.stats.frames_delivered > 0) {
      row.mean_delay_ns =
          static_cast<double>(row.stats.sum_delay_ps) /
          (1000.0 * static_cast<double>(row.stats.frames_delivered));
    }
    throughputs.push_back(row.throughput_bps);
    report.flows.push_back(std::move(row));
  }

  report.frames_generated = frames_created_;
  report.frames_delivered = frames_delivered_;
  report.frames_dropped = frames_dropped_;
  report.frames_residual = residual;
  MCDRR_CHECK(frames_created_ ==
              frames_delivered_ + frames_dropped_ + residual);

  report.aggregate_throughput_bps =
      static_cast<double>(metrics_.total_bytes_delivered()) * 8.0 /
      report.measured_duration.seconds();
  report.jain_index =
      metrics_.total_bytes_delivered() == 0 ? 0.0 : jain_index(throughputs);
  report.offered_load_bps =
      offered_load_bps(config_.flows, config_.link.ifg_bytes);
  report.offered_load_no_ifg_bps = offered_load_bps(config_.flows, 0);

  report.events_dispatched = engine_.dispatched_total();
  report.scan = scheduler_.scan_stats();
  return report;
}

Report run_scenario(const ScenarioConfig& config, SimulationOptions options) {
  Simulation sim(config, options);
  sim.run();
  return sim.report();
}

}  // namespace mcdrr
