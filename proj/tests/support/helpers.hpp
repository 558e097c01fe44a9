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

// Shared test fixtures: a recording scheduler observer and small builders.

#ifndef MCDRR_TESTS_SUPPORT_HELPERS_HPP
#define MCDRR_TESTS_SUPPORT_HELPERS_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "mcdrr/link.hpp"
#include "mcdrr/scenario.hpp"
#include "mcdrr/scheduler.hpp"
#include "mcdrr/time.hpp"

namespace mcdrr::test {

/// One scheduler decision, flat enough to compare whole traces with ==.
struct Decision {
  enum class Kind : std::uint8_t {
    kServe,
    kSkipDeficit,
    kSkipBusy,
    kSend,
    kReset,
  };

  Kind kind = Kind::kServe;
  std::uint32_t queue = 0;
  std::uint32_t frames = 0;    // serve
  std::int64_t deficit = 0;    // serve: after commit; skips: after accrual
  std::uint32_t hol = 0;       // skip_deficit
  std::uint64_t frame_id = 0;  // send
  std::uint32_t size = 0;      // send
  std::uint32_t tx = 0;        // send
  std::uint64_t time_ps = 0;

  friend bool operator==(const Decision&, const Decision&) = default;

  static Decision serve(std::uint32_t q, std::uint32_t frames,
                        std::int64_t after, std::uint64_t t) {
    Decision d;
    d.kind = Kind::kServe;
    d.queue = q;
    d.frames = frames;
    d.deficit = after;
    d.time_ps = t;
    return d;
  }
  static Decision skip_deficit(std::uint32_t q, std::int64_t dc,
                               std::uint32_t hol, std::uint64_t t) {
    Decision d;
    d.kind = Kind::kSkipDeficit;
    d.queue = q;
    d.deficit = dc;
    d.hol = hol;
    d.time_ps = t;
    return d;
  }
  static Decision skip_busy(std::uint32_t q, std::int64_t dc,
                            std::uint64_t t) {
    Decision d;
    d.kind = Kind::kSkipBusy;
    d.queue = q;
    d.deficit = dc;
    d.time_ps = t;
    return d;
  }
  static Decision send(std::uint32_t q, std::uint64_t id, std::uint32_t size,
                       std::uint32_t tx, std::uint64_t t) {
    Decision d;
    d.kind = Kind::kSend;
    d.queue = q;
    d.frame_id = id;
    d.size = size;
    d.tx = tx;
    d.time_ps = t;
    return d;
  }
  static Decision reset(std::uint32_t q, std::uint64_t t) {
    Decision d;
    d.kind = Kind::kReset;
    d.queue = q;
    d.time_ps = t;
    return d;
  }
};

inline std::string to_string(const Decision& d) {
  std::ostringstream os;
  switch (d.kind) {
    case Decision::Kind::kServe:
      os << "serve(q" << d.queue << ", frames=" << d.frames
         << ", dc=" << d.deficit << ")";
      break;
    case Decision::Kind::kSkipDeficit:
      os << "skip-deficit(q" << d.queue << ", dc=" << d.deficit
         << ", hol=" << d.hol << ")";
      break;
    case Decision::Kind::kSkipBusy:
      os << "skip-busy(q" << d.queue << ", dc=" << d.deficit << ")";
      break;
    case Decision::Kind::kSend:
      os << "send(q" << d.queue << ", frame=" << d.frame_id
         << ", size=" << d.size << ", tx" << d.tx << ")";
      break;
    case Decision::Kind::kReset:
      os << "reset(q" << d.queue << ")";
      break;
  }
  os << " @" << d.time_ps << "ps";
  return os.str();
}

/// Collects every observer callback in dispatch order.
class RecordingObserver : public SchedulerObserver {
 public:
  std::vector<Decision> decisions;

  void on_serve(std::uint32_t queue, std::uint32_t frames_scheduled,
                std::int64_t deficit_after, SimTime now) override {
    decisions.push_back(
        Decision::serve(queue, frames_scheduled, deficit_after, now.ps));
  }
  void on_skip_deficit(std::uint32_t queue, std::int64_t deficit,
                       std::uint32_t hol_bytes, SimTime now) override {
    decisions.push_back(
        Decision::skip_deficit(queue, deficit, hol_bytes, now.ps));
  }
  void on_skip_busy(std::uint32_t queue, std::int64_t deficit,
                    SimTime now) override {
    decisions.push_back(Decision::skip_busy(queue, deficit, now.ps));
  }
  void on_send(std::uint32_t queue, std::uint64_t frame_id,
               std::uint32_t size_bytes, std::uint32_t transmitter,
               SimTime start) override {
    decisions.push_back(
        Decision::send(queue, frame_id, size_bytes, transmitter, start.ps));
  }
  void on_deficit_reset(std::uint32_t queue, SimTime now) override {
    decisions.push_back(Decision::reset(queue, now.ps));
  }
};

inline Frame make_frame(std::uint64_t id, std::uint32_t channel,
                        std::uint32_t size, std::uint64_t t_ps = 0) {
  Frame f;
  f.id = id;
  f.channel_id = channel;
  f.size_bytes = size;
  f.t_created = SimTime{t_ps};
  f.t_enqueued = SimTime{t_ps};
  return f;
}

/// A structurally valid scenario for scripted runs: the flow specs only
/// size the machinery, the script decides the actual traffic.
inline ScenarioConfig scripted_config(std::uint32_t channels,
                                      std::uint32_t transmitters,
                                      std::int64_t quantum,
                                      std::uint64_t duration_ps) {
  ScenarioConfig cfg;
  cfg.name = "scripted";
  cfg.link.channels = channels;
  cfg.link.transmitters = transmitters;
  cfg.link.line_rate_bps = 1000000000;
  cfg.link.ifg_bytes = 0;
  cfg.scheduler.quanta.assign(channels, quantum);
  for (std::uint32_t i = 0; i < channels; ++i) {
    FlowSpec f;
    f.flow_id = i;
    f.mean_interframe = SimTime{100000000};  // unused in scripted mode
    f.size = SizeDist::fixed(500);
    cfg.flows.push_back(f);
  }
  cfg.duration = SimTime{duration_ps};
  cfg.master_seed = 1;
  return cfg;
}

}  // namespace mcdrr::test

#endif  // MCDRR_TESTS_SUPPORT_HELPERS_HPP
