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

#include "mcdrr/report.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

namespace mcdrr {

namespace {

// Shortest round-trip representation; locale independent, unlike iostreams.
std::string fmt(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

using ordered_json = nlohmann::ordered_json;

ordered_json scenario_json(const ScenarioConfig& c) {
  ordered_json link;
  link["channels"] = c.link.channels;
  link["transmitters"] = c.link.transmitters;
  link["line_rate_bps"] = c.link.line_rate_bps;
  link["ifg_bytes"] = c.link.ifg_bytes;
  link["tuning_ps"] = c.link.tuning_ps;

  ordered_json sched;
  sched["policy"] =
      c.scheduler.policy == SchedulerPolicy::kMcdrr ? "mcdrr" : "rr-baseline";
  sched["quanta"] = c.scheduler.quanta;
  sched["voq_capacity"] = c.scheduler.voq_capacity;
  sched["max_packets_per_visit"] = c.scheduler.max_packets_per_visit;
  sched["accrue_quantum_when_busy"] = c.scheduler.accrue_quantum_when_busy;

  ordered_json run;
  run["duration_ps"] = c.duration.ps;
  run["warmup_ps"] = c.warmup.ps;
  run["seed"] = c.master_seed;

  ordered_json flows = ordered_json::array();
  for (const FlowSpec& f : c.flows) {
    ordered_json jf;
    jf["flow_id"] = f.flow_id;
    jf["mean_interframe_ps"] = f.mean_interframe.ps;
    if (f.size.kind == SizeDist::Kind::kUniform) {
      jf["size"] = {{"kind", "uniform"},
                    {"min_bytes", f.size.min_bytes},
                    {"max_bytes", f.size.max_bytes}};
    } else {
      jf["size"] = {{"kind", "fixed"}, {"bytes", f.size.min_bytes}};
    }
    flows.push_back(std::move(jf));
  }

  ordered_json j;
  j["name"] = c.name;
  j["link"] = std::move(link);
  j["scheduler"] = std::move(sched);
  j["run"] = std::move(run);
  j["flows"] = std::move(flows);
  return j;
}

}  // namespace

std::string report_to_csv(const Report& report) {
  std::ostringstream out;
  out << "# " << kCsvFormatVersion << "\n";
  out << "flow_id,frames_generated,frames_delivered,frames_dropped,"
         "bytes_delivered,throughput_bps,mean_delay_ns\n";
  for (const FlowReport& f : report.flows) {
    out << f.flow_id << ',' << f.stats.frames_generated << ','
        << f.stats.frames_delivered << ',' << f.stats.frames_dropped << ','
        << f.stats.bytes_delivered << ',' << fmt(f.throughput_bps) << ','
        << fmt(f.mean_delay_ns) << "\n";
  }
  return out.str();
}

std::string report_to_json(const Report& report) {
  ordered_json j;
  j["format_version"] = kReportFormatVersion;
  j["scenario"] = scenario_json(report.scenario);

  ordered_json offered;
  offered["with_ifg_bps"] = report.offered_load_bps;
  offered["without_ifg_bps"] = report.offered_load_no_ifg_bps;
  j["offered_load"] = std::move(offered);

  ordered_json totals;
  totals["frames_generated"] = report.frames_generated;
  totals["frames_delivered"] = report.frames_delivered;
  totals["frames_dropped"] = report.frames_dropped;
  totals["frames_residual"] = report.frames_residual;
  totals["aggregate_throughput_bps"] = report.aggregate_throughput_bps;
  totals["jain_index"] = report.jain_index;
  totals["measured_duration_ps"] = report.measured_duration.ps;
  j["totals"] = std::move(totals);

  ordered_json per_flow = ordered_json::array();
  for (const FlowReport& f : report.flows) {
    ordered_json jf;
    jf["flow_id"] = f.flow_id;
    jf["frames_generated"] = f.stats.frames_generated;
    jf["frames_delivered"] = f.stats.frames_delivered;
    jf["frames_dropped"] = f.stats.frames_dropped;
    jf["bytes_delivered"] = f.stats.bytes_delivered;
    jf["throughput_bps"] = f.throughput_bps;
    jf["mean_delay_ns"] = f.mean_delay_ns;
    jf["frames_still_queued"] = f.stats.frames_still_queued;
    jf["frames_in_flight"] = f.stats.frames_in_flight;
    per_flow.push_back(std::move(jf));
  }
  j["per_flow"] = std::move(per_flow);

  ordered_json engine;
  engine["events_dispatched"] = report.events_dispatched;
  engine["dequeue_calls"] = report.scan.dequeue_calls;
  engine["queues_visited"] = report.scan.queues_visited;
  engine["max_scan_length"] = report.scan.max_scan_length;
  j["engine"] = std::move(engine);

  return j.dump(2) + "\n";
}

}  // namespace mcdrr
