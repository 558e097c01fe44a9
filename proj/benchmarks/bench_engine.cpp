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

#include <benchmark/benchmark.h>

#include "mcdrr/engine.hpp"

namespace {

// Self-feeding handler: every arrival schedules the next one, so the queue
// depth stays constant and the run measures pure dispatch + heap cost.
class Relay final : public mcdrr::EventHandler {
 public:
  explicit Relay(std::uint64_t step_ps) : step_ps_(step_ps) {}

  void on_flow_arrival(mcdrr::Engine& engine, std::uint32_t flow_id,
                       mcdrr::SimTime now) override {
    engine.schedule_flow_arrival(now + mcdrr::SimTime{step_ps_}, flow_id);
  }
  void on_tx_completion(mcdrr::Engine&, std::uint32_t, std::uint32_t,
                        mcdrr::SimTime) override {}

 private:
  std::uint64_t step_ps_;
};

void BM_EngineDispatch(benchmark::State& state) {
  const std::uint32_t streams = static_cast<std::uint32_t>(state.range(0));
  mcdrr::Engine engine;
  Relay relay(1000);
  for (std::uint32_t f = 0; f < streams; ++f) {
    engine.schedule_flow_arrival(mcdrr::SimTime{1 + f}, f);
  }
  std::uint64_t dispatched = 0;
  for (auto _ : state) {
    const mcdrr::SimTime until = engine.now() + mcdrr::SimTime{100000};
    dispatched += engine.run(until, relay).total();
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(dispatched));
}

BENCHMARK(BM_EngineDispatch)->Arg(1)->Arg(16)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
