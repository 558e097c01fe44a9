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

#include "mcdrr/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <map>
#include <sstream>
#include <utility>

namespace mcdrr {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

template <typename T>
bool parse_int(std::string_view s, T& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

bool parse_bool(std::string_view s, bool& out) {
  if (s == "true") {
    out = true;
    return true;
  }
  if (s == "false") {
    out = false;
    return true;
  }
  return false;
}

bool safe_name(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
           c == '_' || c == '.';
  });
}

std::string format_duration(SimTime t) {
  struct Unit {
    std::uint64_t ps;
    const char* suffix;
  };
  static constexpr Unit kUnits[] = {
      {1000000000000ULL, "s"},
      {1000000000ULL, "ms"},
      {1000000ULL, "us"},
      {1000ULL, "ns"},
      {1ULL, "ps"},
  };
  for (const auto& u : kUnits) {
    if (t.ps % u.ps == 0) {
      return std::to_string(t.ps / u.ps) + u.suffix;
    }
  }
  return std::to_string(t.ps) + "ps";
}

enum class Section { kTop, kLink, kScheduler, kRun, kFlows };

[[noreturn]] void fail(int line, const std::string& reason) {
  throw ScenarioParseError(line, reason);
}

}  // namespace

SimTime parse_duration(std::string_view text) {
  text = trim(text);
  std::size_t digits = 0;
  while (digits < text.size() &&
         std::isdigit(static_cast<unsigned char>(text[digits]))) {
    ++digits;
  }
  const std::string_view number = text.substr(0, digits);
  const std::string_view suffix = text.substr(digits);
  std::uint64_t value = 0;
  if (number.empty() || !parse_int(number, value)) {
    throw std::invalid_argument("bad duration: '" + std::string(text) + "'");
  }
  std::uint64_t scale = 0;
  if (suffix == "s") {
    scale = 1000000000000ULL;
  } else if (suffix == "ms") {
    scale = 1000000000ULL;
  } else if (suffix == "us") {
    scale = 1000000ULL;
  } else if (suffix == "ns") {
    scale = 1000ULL;
  } else if (suffix == "ps") {
    scale = 1ULL;
  } else {
    throw std::invalid_argument("bad duration suffix: '" + std::string(text) +
                                "' (want s|ms|us|ns|ps)");
  }
  if (value > UINT64_MAX / scale) {
    throw std::invalid_argument("duration overflows: '" + std::string(text) +
                                "'");
  }
  return SimTime{value * scale};
}

ScenarioConfig parse_scenario(std::string_view text) {
  ScenarioConfig config;
  config.scheduler.quanta.clear();

  bool saw_format = false;
  Section section = Section::kTop;
  std::int64_t quantum_default = 1518;
  std::map<std::uint32_t, std::int64_t> quantum_overrides;
  std::vector<FlowSpec> flows;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos
                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    const std::string_view line = trim(raw);
    if (line.empty()) {
      continue;
    }

    if (!saw_format) {
      // The version pragma must precede everything else.
      const std::size_t eq = line.find('=');
      if (eq == std::string_view::npos || trim(line.substr(0, eq)) != "format") {
        fail(line_no, "first entry must be 'format = " +
                          std::string(kScenarioFormatVersion) + "'");
      }
      const std::string_view version = trim(line.substr(eq + 1));
      if (version != kScenarioFormatVersion) {
        fail(line_no, "unsupported format '" + std::string(version) + "'");
      }
      saw_format = true;
      continue;
    }

    if (line.front() == '[') {
      if (line.back() != ']') {
        fail(line_no, "unterminated section header");
      }
      const std::string_view name = trim(line.substr(1, line.size() - 2));
      if (name == "link") {
        section = Section::kLink;
      } else if (name == "scheduler") {
        section = Section::kScheduler;
      } else if (name == "run") {
        section = Section::kRun;
      } else if (name == "flows") {
        section = Section::kFlows;
      } else {
        fail(line_no, "unknown section [" + std::string(name) + "]");
      }
      continue;
    }

    if (section == Section::kFlows) {
      // <id> <mean-interframe> uniform <min> <max> | fixed <bytes>
      std::istringstream in{std::string(line)};
      std::string id_tok, gap_tok, kind_tok;
      in >> id_tok >> gap_tok >> kind_tok;
      FlowSpec flow;
      if (!parse_int(id_tok, flow.flow_id)) {
        fail(line_no, "bad flow id '" + id_tok + "'");
      }
      try {
        flow.mean_interframe = parse_duration(gap_tok);
      } catch (const std::invalid_argument& e) {
        fail(line_no, e.what());
      }
      if (kind_tok == "uniform") {
        std::string lo_tok, hi_tok;
        in >> lo_tok >> hi_tok;
        std::uint32_t lo = 0, hi = 0;
        if (!parse_int(lo_tok, lo) || !parse_int(hi_tok, hi)) {
          fail(line_no, "bad uniform bounds");
        }
        flow.size = SizeDist::uniform(lo, hi);
      } else if (kind_tok == "fixed") {
        std::string bytes_tok;
        in >> bytes_tok;
        std::uint32_t bytes = 0;
        if (!parse_int(bytes_tok, bytes)) {
          fail(line_no, "bad fixed size");
        }
        flow.size = SizeDist::fixed(bytes);
      } else {
        fail(line_no, "unknown size distribution '" + kind_tok +
                          "' (want uniform|fixed)");
      }
      std::string extra;
      if (in >> extra) {
        fail(line_no, "trailing tokens after flow spec");
      }
      for (const auto& existing : flows) {
        if (existing.flow_id == flow.flow_id) {
          fail(line_no, "duplicate flow id " + std::to_string(flow.flow_id));
        }
      }
      flows.push_back(flow);
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      fail(line_no, "expected 'key = value'");
    }
    const std::string key{trim(line.substr(0, eq))};
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      fail(line_no, "expected 'key = value'");
    }

    auto u32 = [&](std::uint32_t& out) {
      if (!parse_int(value, out)) {
        fail(line_no, "bad integer for '" + key + "'");
      }
    };
    auto u64 = [&](std::uint64_t& out) {
      if (!parse_int(value, out)) {
        fail(line_no, "bad integer for '" + key + "'");
      }
    };
    auto duration = [&]() -> SimTime {
      try {
        return parse_duration(value);
      } catch (const std::invalid_argument& e) {
        fail(line_no, e.what());
      }
    };

    switch (section) {
      case Section::kTop:
        if (key == "name") {
          if (!safe_name(value)) {
            fail(line_no, "scenario name must match [A-Za-z0-9._-]+");
          }
          config.name = std::string(value);
        } else if (key == "format") {
          fail(line_no, "duplicate format line");
        } else {
          fail(line_no, "unknown key '" + key + "' before any section");
        }
        break;

      case Section::kLink:
        if (key == "channels") {
          u32(config.link.channels);
        } else if (key == "transmitters") {
          u32(config.link.transmitters);
        } else if (key == "line_rate_bps") {
          u64(config.link.line_rate_bps);
        } else if (key == "ifg_bytes") {
          u32(config.link.ifg_bytes);
        } else if (key == "tuning") {
          config.link.tuning_ps = duration().ps;
        } else {
          fail(line_no, "unknown key '" + key + "' in [link]");
        }
        break;

      case Section::kScheduler:
        if (key == "policy") {
          if (value == "mcdrr") {
            config.scheduler.policy = SchedulerPolicy::kMcdrr;
          } else if (value == "rr-baseline") {
            config.scheduler.policy = SchedulerPolicy::kRrBaseline;
          } else {
            fail(line_no, "unknown policy '" + std::string(value) +
                              "' (want mcdrr|rr-baseline)");
          }
        } else if (key == "quantum") {
          if (!parse_int(value, quantum_default)) {
            fail(line_no, "bad integer for 'quantum'");
          }
        } else if (key.rfind("quantum.", 0) == 0) {
          std::uint32_t idx = 0;
          if (!parse_int(std::string_view(key).substr(8), idx)) {
            fail(line_no, "bad quantum override index in '" + key + "'");
          }
          std::int64_t q = 0;
          if (!parse_int(value, q)) {
            fail(line_no, "bad integer for '" + key + "'");
          }
          quantum_overrides[idx] = q;
        } else if (key == "voq_capacity") {
          u32(config.scheduler.voq_capacity);
        } else if (key == "max_packets_per_visit") {
          u32(config.scheduler.max_packets_per_visit);
        } else if (key == "accrue_quantum_when_busy") {
          if (!parse_bool(value, config.scheduler.accrue_quantum_when_busy)) {
            fail(line_no, "bad bool for '" + key + "' (want true|false)");
          }
        } else {
          fail(line_no, "unknown key '" + key + "' in [scheduler]");
        }
        break;

      case Section::kRun:
        if (key == "duration") {
          config.duration = duration();
        } else if (key == "warmup") {
          config.warmup = duration();
        } else if (key == "seed") {
          u64(config.master_seed);
        } else {
          fail(line_no, "unknown key '" + key + "' in [run]");
        }
        break;

      case Section::kFlows:
        break;  // handled above
    }
  }

  if (!saw_format) {
    fail(line_no, "missing 'format = " + std::string(kScenarioFormatVersion) +
                      "' line");
  }

  for (const auto& [idx, q] : quantum_overrides) {
    if (idx >= config.link.channels) {
      throw ScenarioValidationError("quantum override for channel " +
                                    std::to_string(idx) + " but only " +
                                    std::to_string(config.link.channels) +
                                    " channels");
    }
  }
  config.scheduler.quanta.assign(config.link.channels, quantum_default);
  for (const auto& [idx, q] : quantum_overrides) {
    config.scheduler.quanta[idx] = q;
  }

  std::sort(flows.begin(), flows.end(),
            [](const FlowSpec& a, const FlowSpec& b) {
              return a.flow_id < b.flow_id;
            });
  config.flows = std::move(flows);

  validate_scenario(config);
  return config;
}

void validate_scenario(const ScenarioConfig& config) {
  auto reject = [](const std::string& reason) {
    throw ScenarioValidationError(reason);
  };

  if (config.link.channels < 1 || config.link.channels > 1024) {
    reject("channels must be in [1, 1024]");
  }
  if (config.link.transmitters < 1) {
    reject("need at least one transmitter");
  }
  if (config.link.line_rate_bps < 1) {
    reject("line_rate_bps must be positive");
  }
  if (!safe_name(config.name)) {
    reject("scenario name must match [A-Za-z0-9._-]+");
  }

  if (config.flows.size() != config.link.channels) {
    reject("config has " + std::to_string(config.flows.size()) +
           " flows but " + std::to_string(config.link.channels) +
           " channels; flows map one-to-one onto channels");
  }
  for (std::uint32_t i = 0; i < config.flows.size(); ++i) {
    const FlowSpec& flow = config.flows[i];
    if (flow.flow_id != i) {
      reject("flow ids must cover 0.." +
             std::to_string(config.link.channels - 1) + " exactly once");
    }
    if (flow.mean_interframe.ps < 1) {
      reject("flow " + std::to_string(i) +
             ": mean interframe must be positive");
    }
    if (flow.size.min_bytes < 64 || flow.size.max_bytes < flow.size.min_bytes ||
        flow.size.max_bytes > 1518) {
      reject("flow " + std::to_string(i) +
             ": frame sizes must lie in the Ethernet range [64, 1518]");
    }
  }

  const std::size_t nq = config.scheduler.quanta.size();
  if (nq != 0 && nq != 1 && nq != config.link.channels) {
    reject("quanta must be empty, a single value, or one per channel");
  }
  for (const std::int64_t q : config.scheduler.quanta) {
    if (q < 1) {
      reject("quantum must be positive");
    }
  }
  if (config.scheduler.voq_capacity < 1) {
    reject("voq_capacity must be positive");
  }
  if (config.duration.ps < 1) {
    reject("duration must be positive");
  }
  if (config.warmup >= config.duration) {
    reject("warmup must be shorter than the run duration");
  }
}

bool is_preset_name(std::string_view name) {
  return name == "paper-a" || name == "paper-b";
}

std::vector<std::string> preset_names() { return {"paper-a", "paper-b"}; }

ScenarioConfig preset_scenario(std::string_view name) {
  if (!is_preset_name(name)) {
    throw ScenarioValidationError("unknown preset '" + std::string(name) +
                                  "' (want paper-a|paper-b)");
  }
  ScenarioConfig config;
  config.name = std::string(name);
  config.link = LinkParams{};  // 16 channels, 2 transmitters, 1 Gb/s, IFG 12
  config.flows = name == "paper-a" ? scenario_a_flows() : scenario_b_flows();
  config.scheduler.quanta.assign(config.link.channels, 1518);
  config.duration = SimTime::from_s(30);
  config.master_seed = 1;
  validate_scenario(config);
  return config;
}

std::string scenario_to_text(const ScenarioConfig& config) {
  validate_scenario(config);

  std::vector<std::int64_t> quanta(config.link.channels, 1518);
  if (config.scheduler.quanta.size() == 1) {
    quanta.assign(config.link.channels, config.scheduler.quanta[0]);
  } else if (!config.scheduler.quanta.empty()) {
    quanta = config.scheduler.quanta;
  }
  const bool uniform_quanta =
      std::all_of(quanta.begin(), quanta.end(),
                  [&](std::int64_t q) { return q == quanta[0]; });

  std::ostringstream out;
  out << "format = " << kScenarioFormatVersion << "\n";
  out << "name = " << config.name << "\n\n";

  out << "[link]\n";
  out << "channels = " << config.link.channels << "\n";
  out << "transmitters = " << config.link.transmitters << "\n";
  out << "line_rate_bps = " << config.link.line_rate_bps << "\n";
  out << "ifg_bytes = " << config.link.ifg_bytes << "\n";
  out << "tuning = " << format_duration(SimTime{config.link.tuning_ps})
      << "\n\n";

  out << "[scheduler]\n";
  out << "policy = "
      << (config.scheduler.policy == SchedulerPolicy::kMcdrr ? "mcdrr"
                                                             : "rr-baseline")
      << "\n";
  if (uniform_quanta) {
    out << "quantum = " << quanta[0] << "\n";
  } else {
    for (std::size_t i = 0; i < quanta.size(); ++i) {
      out << "quantum." << i << " = " << quanta[i] << "\n";
    }
  }
  out << "voq_capacity = " << config.scheduler.voq_capacity << "\n";
  out << "max_packets_per_visit = " << config.scheduler.max_packets_per_visit
      << "\n";
  out << "accrue_quantum_when_busy = "
      << (config.scheduler.accrue_quantum_when_busy ? "true" : "false")
      << "\n\n";

  out << "[run]\n";
  out << "duration = " << format_duration(config.duration) << "\n";
  out << "warmup = " << format_duration(config.warmup) << "\n";
  out << "seed = " << config.master_seed << "\n\n";

  out << "[flows]\n";
  for (const FlowSpec& flow : config.flows) {
    out << flow.flow_id << " " << format_duration(flow.mean_interframe) << " ";
    if (flow.size.kind == SizeDist::Kind::kUniform) {
      out << "uniform " << flow.size.min_bytes << " " << flow.size.max_bytes;
    } else {
      out << "fixed " << flow.size.min_bytes;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace mcdrr
