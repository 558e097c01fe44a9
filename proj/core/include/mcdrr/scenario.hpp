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

#ifndef MCDRR_SCENARIO_HPP
#define MCDRR_SCENARIO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mcdrr/link.hpp"
#include "mcdrr/scheduler.hpp"
#include "mcdrr/time.hpp"
#include "mcdrr/traffic.hpp"

namespace mcdrr {

inline constexpr std::string_view kScenarioFormatVersion = "mcdrr-scenario-1";

/// Malformed scenario text: carries the 1-based line number.
class ScenarioParseError : public std::runtime_error {
 public:
  ScenarioParseError(int line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Well-formed text that describes an inconsistent experiment
/// (e.g. flow count != channel count).
class ScenarioValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A full experiment description; one of these drives one simulation.
struct ScenarioConfig {
  std::string name = "scenario";
  LinkParams link;
  std::vector<FlowSpec> flows;  // exactly one flow per channel
  SchedulerConfig scheduler;    // quanta empty => default 1518 everywhere
  SimTime duration = SimTime::from_s(30);
  SimTime warmup{0};  // metrics ignore events before this time
  std::uint64_t master_seed = 1;
};

/// Parses the line-oriented scenario format (see README). Unknown keys are
/// errors. Throws ScenarioParseError / ScenarioValidationError.
ScenarioConfig parse_scenario(std::string_view text);

/// Consistency checks shared by the parser and the presets.
void validate_scenario(const ScenarioConfig& config);

/// Built-in presets "paper-a" and "paper-b" (16 channels, 2 transmitters,
/// 1 Gb/s, quantum 1518, VOQ 1000 frames, 30 s, seed 1).
bool is_preset_name(std::string_view name);
ScenarioConfig preset_scenario(std::string_view name);
std::vector<std::string> preset_names();

/// Renders a config back into scenario-file text (round-trips through
/// parse_scenario).
std::string scenario_to_text(const ScenarioConfig& config);

/// "30s", "250ms", "16us", "8000ns", "123ps" -> SimTime. Throws
/// std::invalid_argument on anything else.
SimTime parse_duration(std::string_view text);

}  // namespace mcdrr

#endif  // MCDRR_SCENARIO_HPP
