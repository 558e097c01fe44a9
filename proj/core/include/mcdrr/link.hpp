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

#ifndef MCDRR_LINK_HPP
#define MCDRR_LINK_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mcdrr/time.hpp"

namespace mcdrr {

/// A schedulable Ethernet frame with its lifecycle timestamps.
struct Frame {
  std::uint64_t id = 0;
  std::uint32_t channel_id = 0;  // destination channel == flow id
  std::uint32_t size_bytes = 0;  // Ethernet bounds [64, 1518]
  SimTime t_created;
  SimTime t_enqueued;
  std::optional<SimTime> t_tx_start;
  std::optional<SimTime> t_delivered;
};

/// One WDM channel terminated by a fixed receiver. At most one transmitter
/// may occupy a channel at any instant.
struct ChannelState {
  bool busy = false;
  std::optional<std::uint32_t> current_transmitter;
};

/// One tunable transmitter. With tuning_ps == 0 (the default) tuning is
/// instantaneous: a transmitter may end a transmission and start one on
/// another channel at the same timestamp. Otherwise each wavelength switch
/// delays the next completion by tuning_ps.
struct TransmitterState {
  bool busy = false;
  std::optional<std::uint32_t> current_channel;
  std::optional<std::uint32_t> tuned_channel;  // survives idle periods
  std::optional<SimTime> completion_time;
};

struct LinkParams {
  std::uint32_t channels = 16;       // W
  std::uint32_t transmitters = 2;    // M
  std::uint64_t line_rate_bps = 1000000000;
  std::uint32_t ifg_bytes = 12;      // inter-frame gap, charged to the channel
  std::uint64_t tuning_ps = 0;       // retune delay when switching channels
};

/// Channel occupancy time for one frame: (size + ifg) bytes at the line
/// rate, rounded half-up to integer picoseconds. Exact at 1 Gb/s where a
/// byte is 8000 ps.
SimTime transmission_duration(std::uint32_t size_bytes,
                              std::uint32_t ifg_bytes,
                              std::uint64_t line_rate_bps);

/// The hybrid TDM/WDM link: W fixed-receiver channels fed by M tunable
/// transmitters. Pairing bookkeeping only; scheduling lives elsewhere.
class Link {
 public:
  explicit Link(LinkParams params);

  const LinkParams& params() const { return params_; }

  /// Lowest-indexed idle transmitter, or nullopt when all are busy.
  /// Does not mutate state.
  std::optional<std::uint32_t> acquire_transmitter() const;

  /// Marks the pair busy, stamps frame.t_tx_start, and returns the
  /// completion time the caller must schedule. Both endpoints must be idle.
  SimTime begin_transmission(Frame& frame, std::uint32_t channel_id,
                             std::uint32_t transmitter_id, SimTime now);

  /// Releases a busy pair. The pairing must match what begin recorded.
  void end_transmission(std::uint32_t transmitter_id, std::uint32_t channel_id,
                        SimTime now);

  bool channel_busy(std::uint32_t channel_id) const;
  bool transmitter_busy(std::uint32_t transmitter_id) const;
  std::uint32_t busy_channels() const;
  std::uint32_t busy_transmitters() const;

  const ChannelState& channel(std::uint32_t id) const { return channels_[id]; }
  const TransmitterState& transmitter(std::uint32_t id) const {
    return transmitters_[id];
  }

 private:
  LinkParams params_;
  std::vector<ChannelState> channels_;
  std::vector<TransmitterState> transmitters_;
};

}  // namespace mcdrr

#endif  // MCDRR_LINK_HPP
