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

// Offline single-server deficit round-robin, written with plain loops and
// no event queue. With one transmitter the multi-channel scheduler
// degenerates to classic DRR, so this acts as an independent oracle: same
// arrivals in, the send sequence, drop count, residual backlog and final
// deficits must all match the simulator exactly.
//
// Scan points mirror the simulator's trigger discipline:
//   - while the server is idle, each accepted arrival triggers one scan;
//   - a served visit commits a batch against the queue snapshot, and the
//     batch transmits back to back with no scan in between;
//   - a completion triggers the next scan before arrivals carrying the
//     same timestamp are admitted (completions dispatch first on ties);
//   - a queue skipped for deficit keeps its accrual, and a queue popped
//     empty forfeits it.

#ifndef MCDRR_TESTS_SUPPORT_REFERENCE_DRR_HPP
#define MCDRR_TESTS_SUPPORT_REFERENCE_DRR_HPP

#include <cstdint>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

namespace mcdrr::test {

struct RefArrival {
  std::uint64_t time_ps = 0;
  std::uint32_t queue = 0;
  std::uint32_t size_bytes = 0;
};

struct RefSend {
  std::uint32_t queue = 0;
  std::uint32_t size_bytes = 0;
  std::uint64_t start_ps = 0;

  friend bool operator==(const RefSend&, const RefSend&) = default;
};

struct RefParams {
  std::uint32_t num_queues = 4;
  std::vector<std::int64_t> quanta;  // one per queue
  std::uint32_t capacity = 1000;
  std::uint32_t max_per_visit = 0;  // 0 = unlimited
  std::uint64_t line_rate_bps = 1000000000;
  std::uint32_t ifg_bytes = 0;
};

struct RefResult {
  std::vector<RefSend> sends;
  std::vector<std::size_t> residual;   // per-queue leftover frames
  std::vector<std::int64_t> deficits;  // per-queue final deficit
  std::uint64_t drops = 0;
};

inline std::uint64_t ref_tx_time_ps(std::uint32_t size_bytes,
                                    std::uint32_t ifg_bytes,
                                    std::uint64_t rate_bps) {
  const std::uint64_t bits =
      (static_cast<std::uint64_t>(size_bytes) + ifg_bytes) * 8u;
  return (bits * 1000000000000ull + rate_bps / 2) / rate_bps;
}

/// `arrivals` must be sorted by time (ties keep input order).
inline RefResult reference_drr_run(const RefParams& p,
                                   const std::vector<RefArrival>& arrivals) {
  const std::uint32_t w = p.num_queues;
  std::vector<std::deque<std::uint32_t>> q(w);
  std::vector<std::int64_t> dc(w, 0);
  std::uint32_t ptr = w - 1;  // first scan starts at queue 0
  std::uint64_t clock = 0;
  std::size_t next = 0;
  RefResult out;

  auto admit = [&](const RefArrival& a) {
    if (q[a.queue].size() >= p.capacity) {
      ++out.drops;
      return false;
    }
    q[a.queue].push_back(a.size_bytes);
    return true;
  };

  // One rotation scan; commits a batch on the first queue whose accrued
  // deficit covers its head frame.
  auto scan = [&]() -> std::optional<std::pair<std::uint32_t, std::uint32_t>> {
    for (std::uint32_t i = 0; i < w; ++i) {
      const std::uint32_t idx = (ptr + 1 + i) % w;
      if (q[idx].empty()) continue;
      dc[idx] += p.quanta[idx];
      if (dc[idx] < static_cast<std::int64_t>(q[idx].front())) continue;
      ptr = idx;
      std::uint32_t count = 0;
      std::int64_t budget = dc[idx];
      while (count < q[idx].size() &&
             (p.max_per_visit == 0 || count < p.max_per_visit) &&
             budget >= static_cast<std::int64_t>(q[idx][count])) {
        budget -= static_cast<std::int64_t>(q[idx][count]);
        ++count;
      }
      dc[idx] = budget;
      return std::make_pair(idx, count);
    }
    return std::nullopt;
  };

  std::optional<std::pair<std::uint32_t, std::uint32_t>> batch;
  while (true) {
    if (!batch) {
      // Idle server: advance to the next arrival and scan if it landed.
      if (next >= arrivals.size()) break;
      const RefArrival a = arrivals[next++];
      if (a.time_ps > clock) clock = a.time_ps;
      if (admit(a)) batch = scan();
      continue;
    }

    const auto [bq, bcount] = *batch;
    for (std::uint32_t k = 0; k < bcount; ++k) {
      const std::uint32_t size = q[bq].front();
      out.sends.push_back(RefSend{bq, size, clock});
      const std::uint64_t end =
          clock + ref_tx_time_ps(size, p.ifg_bytes, p.line_rate_bps);
      // Arrivals strictly before the completion join their queues while
      // the frame is on the wire; ties wait for the completion.
      while (next < arrivals.size() && arrivals[next].time_ps < end) {
        admit(arrivals[next++]);
      }
      clock = end;
      q[bq].pop_front();
      if (q[bq].empty()) dc[bq] = 0;
    }
    batch = scan();
  }

  for (std::uint32_t i = 0; i < w; ++i) out.residual.push_back(q[i].size());
  out.deficits = dc;
  return out;
}

}  // namespace mcdrr::test

#endif  // MCDRR_TESTS_SUPPORT_REFERENCE_DRR_HPP
