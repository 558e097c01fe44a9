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

// Event engine ordering, tie-breaking and resumability.

#include <cstdint>
#include <vector>

#include <doctest.h>

#include "mcdrr/check.hpp"
#include "mcdrr/engine.hpp"

namespace {

using mcdrr::Engine;
using mcdrr::EventHandler;
using mcdrr::SimTime;

struct Dispatched {
  char kind;  // 'A' arrival, 'C' completion
  std::uint32_t id;
  std::uint64_t time_ps;

  friend bool operator==(const Dispatched&, const Dispatched&) = default;
};

/// Records dispatches; does not schedule anything on its own.
struct Recorder : EventHandler {
  std::vector<Dispatched> seen;

  void on_flow_arrival(Engine&, std::uint32_t flow_id, SimTime now) override {
    seen.push_back({'A', flow_id, now.ps});
  }
  void on_tx_completion(Engine&, std::uint32_t transmitter_id, std::uint32_t,
                        SimTime now) override {
    seen.push_back({'C', transmitter_id, now.ps});
  }
};

}  // namespace

TEST_SUITE_BEGIN("engine");

TEST_CASE("empty run dispatches nothing and leaves the clock at zero") {
  Engine e;
  Recorder r;
  const auto summary = e.run(SimTime{1000000}, r);
  CHECK(summary.total() == 0);
  CHECK(e.now().ps == 0);
  CHECK(e.pending() == 0);
}

TEST_CASE("events dispatch in timestamp order regardless of insertion") {
  Engine e;
  Recorder r;
  e.schedule_flow_arrival(SimTime{5000}, 1);
  e.schedule_flow_arrival(SimTime{3000}, 2);
  e.schedule_flow_arrival(SimTime{9000}, 3);
  e.run(SimTime{10000}, r);

  const std::vector<Dispatched> want = {
      {'A', 2, 3000}, {'A', 1, 5000}, {'A', 3, 9000}};
  CHECK(r.seen == want);
  CHECK(e.now().ps == 9000);
}

TEST_CASE("completions dispatch before arrivals at the same timestamp") {
  Engine e;
  Recorder r;
  // Arrival inserted first; the completion must still win the tie.
  e.schedule_flow_arrival(SimTime{100}, 7);
  e.schedule_tx_completion(SimTime{100}, 0, 3);
  e.run(SimTime{100}, r);

  REQUIRE(r.seen.size() == 2);
  CHECK(r.seen[0].kind == 'C');
  CHECK(r.seen[1].kind == 'A');
}

TEST_CASE("equal time and kind dispatch in insertion order") {
  Engine e;
  Recorder r;
  e.schedule_flow_arrival(SimTime{42}, 10);
  e.schedule_flow_arrival(SimTime{42}, 20);
  e.schedule_flow_arrival(SimTime{42}, 30);
  e.run(SimTime{42}, r);

  const std::vector<Dispatched> want = {
      {'A', 10, 42}, {'A', 20, 42}, {'A', 30, 42}};
  CHECK(r.seen == want);
}

TEST_CASE("events beyond the horizon stay pending") {
  Engine e;
  Recorder r;
  e.schedule_flow_arrival(SimTime{2000000000000}, 0);  // 2 s
  const auto summary = e.run(SimTime{1000000000000}, r);

  CHECK(summary.total() == 0);
  CHECK(e.pending() == 1);
  CHECK(e.now().ps == 0);  // nothing dispatched, clock untouched
}

TEST_CASE("run is resumable and the clock never moves backwards") {
  Engine e;
  Recorder r;
  e.schedule_flow_arrival(SimTime{10}, 0);
  e.schedule_flow_arrival(SimTime{20}, 1);
  e.schedule_flow_arrival(SimTime{30}, 2);

  auto s1 = e.run(SimTime{15}, r);
  CHECK(s1.arrivals == 1);
  CHECK(e.now().ps == 10);
  CHECK(e.pending() == 2);

  auto s2 = e.run(SimTime{30}, r);
  CHECK(s2.arrivals == 2);
  CHECK(e.now().ps == 30);
  CHECK(e.pending() == 0);
  CHECK(e.dispatched_total() == 3);
  CHECK(e.scheduled_total() == 3);
}

TEST_CASE("handlers may schedule while handling") {
  struct Chain : EventHandler {
    int hops = 0;
    void on_flow_arrival(Engine& e, std::uint32_t, SimTime now) override {
      if (++hops < 5) e.schedule_flow_arrival(now + SimTime{1000}, 0);
    }
    void on_tx_completion(Engine&, std::uint32_t, std::uint32_t,
                          SimTime) override {}
  };

  Engine e;
  Chain chain;
  e.schedule_flow_arrival(SimTime{0}, 0);
  const auto summary = e.run(SimTime{100000}, chain);
  CHECK(summary.arrivals == 5);
  CHECK(e.now().ps == 4000);
}

TEST_CASE("no event is lost: scheduled == dispatched + pending") {
  Engine e;
  Recorder r;
  for (std::uint64_t i = 0; i < 100; ++i) {
    e.schedule_flow_arrival(SimTime{i * 17 % 1000}, 0);
    e.schedule_tx_completion(SimTime{i * 31 % 1000}, 0, 0);
  }
  e.run(SimTime{500}, r);
  CHECK(e.scheduled_total() == e.dispatched_total() + e.pending());
}

TEST_CASE("run summary counts arrivals and completions separately") {
  Engine e;
  Recorder r;
  e.schedule_flow_arrival(SimTime{1}, 0);
  e.schedule_flow_arrival(SimTime{2}, 0);
  e.schedule_tx_completion(SimTime{3}, 0, 0);
  const auto summary = e.run(SimTime{10}, r);
  CHECK(summary.arrivals == 2);
  CHECK(summary.completions == 1);
  CHECK(summary.end_clock.ps == 3);
}

TEST_CASE("scheduling in the past is a logic error") {
  Engine e;
  Recorder r;
  e.schedule_flow_arrival(SimTime{1000}, 0);
  e.run(SimTime{1000}, r);
  REQUIRE(e.now().ps == 1000);

  CHECK_THROWS_AS(e.schedule_flow_arrival(SimTime{999}, 0),
                  mcdrr::InternalError);
  CHECK_THROWS_AS(e.schedule_tx_completion(SimTime{500}, 0, 0),
                  mcdrr::InternalError);
  // Scheduling exactly at the current clock is allowed.
  CHECK_NOTHROW(e.schedule_flow_arrival(SimTime{1000}, 0));
}

TEST_SUITE_END();
