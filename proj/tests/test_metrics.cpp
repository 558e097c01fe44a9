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

// Fairness index, throughput and offered-load arithmetic.

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "mcdrr/metrics.hpp"
#include "mcdrr/traffic.hpp"
#include "support/helpers.hpp"

namespace {

using mcdrr::FlowSpec;
using mcdrr::FlowStats;
using mcdrr::jain_index;
using mcdrr::Metrics;
using mcdrr::offered_load_bps;
using mcdrr::SimTime;
using mcdrr::SizeDist;
using mcdrr::throughput_bps;
using mcdrr::test::make_frame;

}  // namespace

TEST_SUITE_BEGIN("metrics");

TEST_CASE("jain index closed forms") {
  const std::vector<double> equal = {5.0, 5.0, 5.0, 5.0};
  CHECK(jain_index(equal) == doctest::Approx(1.0));

  const std::vector<double> skew = {3.0, 1.0};
  // (3+1)^2 / (2 * (9+1)) = 16/20.
  CHECK(jain_index(skew) == doctest::Approx(0.8));

  const std::vector<double> starved = {1.0, 1.0, 1.0, 0.0};
  // 9 / (4 * 3) = 0.75.
  CHECK(jain_index(starved) == doctest::Approx(0.75));

  const std::vector<double> one = {42.0};
  CHECK(jain_index(one) == doctest::Approx(1.0));
}

TEST_CASE("jain index rejects inputs it is undefined for") {
  const std::vector<double> zeros = {0.0, 0.0};
  CHECK_THROWS_AS((void)jain_index(zeros), std::domain_error);
  const std::vector<double> negative = {1.0, -0.5};
  CHECK_THROWS_AS((void)jain_index(negative), std::domain_error);
  const std::vector<double> empty;
  CHECK_THROWS_AS((void)jain_index(empty), std::domain_error);
}

TEST_CASE("jain index is invariant under permutation and scaling") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> dist(0.1, 100.0);
  std::vector<double> xs(16);
  for (auto& x : xs) x = dist(rng);

  const double base = jain_index(xs);
  CHECK(base >= 1.0 / 16.0);
  CHECK(base <= 1.0 + 1e-12);

  std::vector<double> shuffled = xs;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  CHECK(jain_index(shuffled) == doctest::Approx(base).epsilon(1e-12));

  std::vector<double> scaled = xs;
  for (auto& x : scaled) x *= 3.7;
  CHECK(jain_index(scaled) == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("throughput counts frame bytes over the window") {
  FlowStats s;
  s.bytes_delivered = 125000000;  // 1 Gb in bytes
  CHECK(throughput_bps(s, SimTime::from_s(1)) == doctest::Approx(1e9));
  CHECK(throughput_bps(s, SimTime::from_s(2)) == doctest::Approx(5e8));

  FlowStats none;
  CHECK(throughput_bps(none, SimTime::from_s(1)) == 0.0);
  CHECK_THROWS_AS((void)throughput_bps(s, SimTime{0}), std::invalid_argument);
}

TEST_CASE("offered load for the reference flow sets") {
  // Scenario A with the 12-byte gap charged: 2.409 Gb/s on the nose.
  const double load_a = offered_load_bps(mcdrr::scenario_a_flows(), 12);
  CHECK(load_a == doctest::Approx(2.409e9).epsilon(1e-3));

  // Scenario B without the gap: 2.375 Gb/s exactly.
  const double load_b = offered_load_bps(mcdrr::scenario_b_flows(), 0);
  CHECK(load_b == doctest::Approx(2.375e9).epsilon(1e-9));

  // Single fixed-size flow: (1000 + 12) * 8 bits every 16 us.
  FlowSpec f;
  f.flow_id = 0;
  f.mean_interframe = SimTime::from_us(16);
  f.size = SizeDist::fixed(1000);
  CHECK(offered_load_bps({f}, 12) == doctest::Approx(506e6).epsilon(1e-9));
}

TEST_CASE("delivery updates bytes and accumulated delay") {
  Metrics m(2);
  m.record_generated(1);
  m.record_generated(1);

  auto f = make_frame(1, 1, 500, 1000);
  m.record_delivered(f, SimTime{11000});  // 10 ns after creation
  CHECK(m.flow(1).frames_delivered == 1);
  CHECK(m.flow(1).bytes_delivered == 500);
  CHECK(m.flow(1).sum_delay_ps == 10000);

  m.record_dropped(1);
  CHECK(m.flow(1).frames_dropped == 1);
  CHECK(m.flow(1).bytes_delivered == 500);  // drops never count bytes

  CHECK(m.total_generated() == 2);
  CHECK(m.total_delivered() == 1);
  CHECK(m.total_dropped() == 1);
  CHECK(m.total_bytes_delivered() == 500);
  CHECK(m.flow(0).frames_generated == 0);
}

TEST_SUITE_END();
