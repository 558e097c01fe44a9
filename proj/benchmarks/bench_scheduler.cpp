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

#include "mcdrr/scenario.hpp"
#include "mcdrr/simulation.hpp"

namespace {

// Overloaded link with W equally loaded flows; stresses the rotation scan
// and the per-departure batch continuation.
mcdrr::ScenarioConfig uniform_scenario(std::uint32_t channels,
                                       mcdrr::SimTime duration) {
  mcdrr::ScenarioConfig config;
  config.name = "bench";
  config.link.channels = channels;
  config.link.transmitters = 2;
  config.duration = duration;
  for (std::uint32_t f = 0; f < channels; ++f) {
    mcdrr::FlowSpec flow;
    flow.flow_id = f;
    // Slight overload in aggregate so every queue stays backlogged.
    flow.mean_interframe = mcdrr::SimTime::from_ns(2200 * channels);
    flow.size = mcdrr::SizeDist::fixed(500);
    config.flows.push_back(flow);
  }
  return config;
}

void BM_SimulateOverload(benchmark::State& state) {
  const std::uint32_t channels = static_cast<std::uint32_t>(state.range(0));
  std::uint64_t events = 0;
  for (auto _ : state) {
    mcdrr::Simulation sim(
        uniform_scenario(channels, mcdrr::SimTime::from_ms(20)));
    sim.run();
    events += sim.engine().dispatched_total();
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(events));
}

BENCHMARK(BM_SimulateOverload)->Arg(4)->Arg(16)->Arg(64)
    ->Unit(benchmark::kMillisecond);

void BM_SimulatePresetSlice(benchmark::State& state) {
  // 50 ms slices of the two stock experiments.
  mcdrr::ScenarioConfig config =
      mcdrr::preset_scenario(state.range(0) == 0 ? "paper-a" : "paper-b");
  config.duration = mcdrr::SimTime::from_ms(50);
  std::uint64_t events = 0;
  for (auto _ : state) {
    mcdrr::Simulation sim(config);
    sim.run();
    events += sim.engine().dispatched_total();
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(events));
}

BENCHMARK(BM_SimulatePresetSlice)->Arg(0)->Arg(1)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
