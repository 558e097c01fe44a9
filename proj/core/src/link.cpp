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

#include "mcdrr/link.hpp"

#include "mcdrr/check.hpp"

namespace mcdrr {

SimTime transmission_duration(std::uint32_t size_bytes,
                              std::uint32_t ifg_bytes,
                              std::uint64_t line_rate_bps) {
  MCDRR_CHECK(size_bytes >= 1);
  MCDRR_CHECK(line_rate_bps >= 1);
  // bits * 10^12 / rate, rounded half-up. Fits in 64 bits for Ethernet
  // frame sizes: 1530 bytes * 8 * 10^12 ~ 1.2e16.
  const std::uint64_t bits =
      (static_cast<std::uint64_t>(size_bytes) + ifg_bytes) * 8ULL;
  const std::uint64_t numer = bits * 1000000000000ULL + line_rate_bps / 2;
  return SimTime{numer / line_rate_bps};
}

Link::Link(LinkParams params) : params_(params) {
  MCDRR_CHECK(params_.channels >= 1);
  MCDRR_CHECK(params_.transmitters >= 1);
  channels_.resize(params_.channels);
  transmitters_.resize(params_.transmitters);
}

std::optional<std::uint32_t> Link::acquire_transmitter() const {
  for (std::uint32_t i = 0; i < transmitters_.size(); ++i) {
    if (!transmitters_[i].busy) {
      return i;
    }
  }
  return std::nullopt;
}

SimTime Link::begin_transmission(Frame& frame, std::uint32_t channel_id,
                                 std::uint32_t transmitter_id, SimTime now) {
  MCDRR_CHECK(channel_id < channels_.size());
  MCDRR_CHECK(transmitter_id < transmitters_.size());
  ChannelState& ch = channels_[channel_id];
  TransmitterState& tx = transmitters_[transmitter_id];
  MCDRR_CHECK_MSG(!ch.busy, "channel " << channel_id << " already busy");
  MCDRR_CHECK_MSG(!tx.busy, "transmitter " << transmitter_id << " already busy");

  SimTime done = now + transmission_duration(frame.size_bytes,
                                             params_.ifg_bytes,
                                             params_.line_rate_bps);
  if (tx.tuned_channel != channel_id) {
    done += SimTime{params_.tuning_ps};
  }
  ch.busy = true;
  ch.current_transmitter = transmitter_id;
  tx.busy = true;
  tx.current_channel = channel_id;
  tx.tuned_channel = channel_id;
  tx.completion_time = done;
  frame.t_tx_start = now;
  return done;
}

void Link::end_transmission(std::uint32_t transmitter_id,
                            std::uint32_t channel_id, SimTime now) {
  MCDRR_CHECK(channel_id < channels_.size());
  MCDRR_CHECK(transmitter_id < transmitters_.size());
  ChannelState& ch = channels_[channel_id];
  TransmitterState& tx = transmitters_[transmitter_id];
  MCDRR_CHECK_MSG(ch.busy && tx.busy,
                  "ending an idle pair tx=" << transmitter_id << " ch="
                                            << channel_id);
  MCDRR_CHECK_MSG(ch.current_transmitter == transmitter_id &&
                      tx.current_channel == channel_id,
                  "mismatched pairing at end of transmission");
  MCDRR_CHECK(tx.completion_time == now);

  ch.busy = false;
  ch.current_transmitter.reset();
  tx.busy = false;
  tx.current_channel.reset();
  tx.completion_time.reset();
}

bool Link::channel_busy(std::uint32_t channel_id) const {
  MCDRR_CHECK(channel_id < channels_.size());
  return channels_[channel_id].busy;
}

bool Link::transmitter_busy(std::uint32_t transmitter_id) const {
  MCDRR_CHECK(transmitter_id < transmitters_.size());
  return transmitters_[transmitter_id].busy;
}

std::uint32_t Link::busy_channels() const {
  std::uint32_t n = 0;
  for (const auto& c : channels_) {
    n += c.busy ? 1 : 0;
  }
  return n;
}

std::uint32_t Link::busy_transmitters() const {
  std::uint32_t n = 0;
  for (const auto& t : transmitters_) {
    n += t.busy ? 1 : 0;
  }
  return n;
}

}  // namespace mcdrr
