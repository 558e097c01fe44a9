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

#ifndef MCDRR_REPORT_HPP
#define MCDRR_REPORT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mcdrr/metrics.hpp"
#include "mcdrr/scenario.hpp"
#include "mcdrr/scheduler.hpp"

namespace mcdrr {

inline constexpr std::string_view kCsvFormatVersion = "mcdrr-csv-1";
inline constexpr std::string_view kReportFormatVersion = "mcdrr-report-1";

struct FlowReport {
  std::uint32_t flow_id = 0;
  FlowStats stats;
  double throughput_bps = 0.0;
  double mean_delay_ns = 0.0;  // 0 when nothing was delivered
};

/// Everything one simulation run produced. The scenario echo lets a report
/// stand alone: re-running the echoed config reproduces the report.
struct Report {
  ScenarioConfig scenario;
  std::vector<FlowReport> flows;

  double aggregate_throughput_bps = 0.0;
  double jain_index = 0.0;
  double offered_load_bps = 0.0;         // counts the configured IFG
  double offered_load_no_ifg_bps = 0.0;  // frame bytes only

  SimTime measured_duration{0};  // duration minus warmup

  std::uint64_t frames_generated = 0;
  std::uint64_t frames_delivered = 0;
  std::uint64_t frames_dropped = 0;
  std::uint64_t frames_residual = 0;  // still queued or on the wire at the end

  std::uint64_t events_dispatched = 0;
  ScanStats scan;
};

/// Per-flow CSV: a version comment line, a header, one row per flow.
/// Locale independent, '\n' line endings, deterministic for a given Report.
std::string report_to_csv(const Report& report);

/// Structured summary as pretty-printed JSON (2-space indent, trailing
/// newline). Includes the full scenario echo.
std::string report_to_json(const Report& report);

}  // namespace mcdrr

#endif  // MCDRR_REPORT_HPP
