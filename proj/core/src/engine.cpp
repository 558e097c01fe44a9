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

#include "mcdrr/engine.hpp"

#include "mcdrr/check.hpp"

namespace mcdrr {

void Engine::schedule_flow_arrival(SimTime t, std::uint32_t flow_id) {
  MCDRR_CHECK_MSG(t >= clock_, "arrival scheduled in the past: t=" << t.ps
                                << " clock=" << clock_.ps);
  queue_.push(t, EventKind::kFlowArrival, flow_id, 0);
}

void Engine::schedule_tx_completion(SimTime t, std::uint32_t transmitter_id,
                                    std::uint32_t channel_id) {
  MCDRR_CHECK_MSG(t >= clock_, "completion scheduled in the past: t=" << t.ps
                                << " clock=" << clock_.ps);
  queue_.push(t, EventKind::kTxCompletion, transmitter_id, channel_id);
}

RunSummary Engine::run(SimTime until, EventHandler& handler) {
  RunSummary summary;
  summary.end_clock = clock_;

  while (!queue_.empty() && queue_.top().time <= until) {
    Event e = queue_.pop();
    MCDRR_CHECK_MSG(e.time >= clock_, "clock would run backwards");
    clock_ = e.time;
    ++dispatched_;

    switch (e.kind) {
      case EventKind::kTxCompletion:
        ++summary.completions;
        handler.on_tx_completion(*this, e.transmitter_id(), e.channel_id(),
                                 e.time);
        break;
      case EventKind::kFlowArrival:
        ++summary.arrivals;
        handler.on_flow_arrival(*this, e.flow_id(), e.time);
        break;
    }
  }

  summary.end_clock = clock_;
  return summary;
}

}  // namespace mcdrr
