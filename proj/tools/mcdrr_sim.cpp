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

// Command line runner. Exit codes:
//   0  success
//   2  unusable input (CLI usage, scenario syntax)
//   3  well-formed but inconsistent configuration
//   4  internal invariant failure (a bug; please report)
//   5  filesystem trouble

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "mcdrr/check.hpp"
#include "mcdrr/report.hpp"
#include "mcdrr/scenario.hpp"
#include "mcdrr/simulation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitInternal = 4;
constexpr int kExitIo = 5;

struct Options {
  std::string preset;
  std::string scenario_path;
  std::string duration;
  std::string warmup;
  std::string scheduler;
  std::string seeds;
  std::string out_dir = ".";
  std::string format = "both";  // csv|json|both
  unsigned jobs = 1;
  bool audit = false;
  bool print_config = false;
  bool list_presets = false;
};

std::string fmt(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::uint64_t seed = 0;
    const char* first = item.data();
    const char* last = item.data() + item.size();
    auto [ptr, ec] = std::from_chars(first, last, seed);
    if (ec != std::errc{} || ptr != last) {
      throw CLI::ValidationError("--seeds", "bad seed '" + item + "'");
    }
    seeds.push_back(seed);
  }
  if (seeds.empty()) {
    throw CLI::ValidationError("--seeds", "no seeds given");
  }
  return seeds;
}

mcdrr::ScenarioConfig load_base_scenario(const Options& opt) {
  if (!opt.preset.empty()) {
    return mcdrr::preset_scenario(opt.preset);
  }
  std::ifstream in(opt.scenario_path, std::ios::binary);
  if (!in) {
    throw std::ios_base::failure("cannot open scenario file '" +
                                 opt.scenario_path + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) {
    throw std::ios_base::failure("cannot read scenario file '" +
                                 opt.scenario_path + "'");
  }
  return mcdrr::parse_scenario(text.str());
}

const char* policy_name(mcdrr::SchedulerPolicy policy) {
  return policy == mcdrr::SchedulerPolicy::kMcdrr ? "mcdrr" : "rr-baseline";
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << body;
  out.flush();
  if (!out) {
    throw std::ios_base::failure("cannot write '" + path.string() + "'");
  }
}

struct SeedResult {
  std::uint64_t seed = 0;
  std::string summary_line;
};

SeedResult run_one(const mcdrr::ScenarioConfig& base, std::uint64_t seed,
                   const Options& opt) {
  mcdrr::ScenarioConfig config = base;
  config.master_seed = seed;

  mcdrr::Report report =
      mcdrr::run_scenario(config, mcdrr::SimulationOptions{opt.audit});

  const std::string stem = config.name + "-" +
                           policy_name(config.scheduler.policy) + "-s" +
                           std::to_string(seed);
  const std::filesystem::path dir(opt.out_dir);
  if (opt.format == "csv" || opt.format == "both") {
    write_file(dir / (stem + ".csv"), mcdrr::report_to_csv(report));
  }
  if (opt.format == "json" || opt.format == "both") {
    write_file(dir / (stem + ".json"), mcdrr::report_to_json(report));
  }

  std::ostringstream line;
  line << stem << ": generated=" << report.frames_generated
       << " delivered=" << report.frames_delivered
       << " dropped=" << report.frames_dropped
       << " aggregate_bps=" << fmt(report.aggregate_throughput_bps)
       << " jain=" << fmt(report.jain_index);
  return SeedResult{seed, line.str()};
}

int run(const Options& opt) {
  mcdrr::ScenarioConfig base = load_base_scenario(opt);

  if (!opt.duration.empty()) {
    base.duration = mcdrr::parse_duration(opt.duration);
  }
  if (!opt.warmup.empty()) {
    base.warmup = mcdrr::parse_duration(opt.warmup);
  }
  if (!opt.scheduler.empty()) {
    base.scheduler.policy = opt.scheduler == "mcdrr"
                                ? mcdrr::SchedulerPolicy::kMcdrr
                                : mcdrr::SchedulerPolicy::kRrBaseline;
  }
  std::vector<std::uint64_t> seeds{base.master_seed};
  if (!opt.seeds.empty()) {
    seeds = parse_seed_list(opt.seeds);
  }
  mcdrr::validate_scenario(base);

  if (opt.print_config) {
    std::cout << mcdrr::scenario_to_text(base);
    return kExitOk;
  }

  std::filesystem::create_directories(opt.out_dir);

  std::vector<SeedResult> results(seeds.size());
  const unsigned jobs =
      std::max(1u, std::min<unsigned>(opt.jobs,
                                      static_cast<unsigned>(seeds.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < seeds.size(); ++i) {
      results[i] = run_one(base, seeds[i], opt);
    }
  } else {
    // Instances share nothing mutable; one thread per slot of work.
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= seeds.size()) {
            return;
          }
          try {
            results[i] = run_one(base, seeds[i], opt);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) {
              first_error = std::current_exception();
            }
            return;
          }
        }
      });
    }
    for (std::thread& t : pool) {
      t.join();
    }
    if (first_error) {
      std::rethrow_exception(first_error);
    }
  }

  for (const SeedResult& r : results) {
    std::cout << r.summary_line << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"MCDRR hybrid TDM/WDM link simulator"};
  app.add_option("--preset", opt.preset, "Built-in scenario (paper-a|paper-b)")
      ->check(CLI::IsMember(mcdrr::preset_names()));
  app.add_option("--scenario", opt.scenario_path, "Scenario file path")
      ->excludes("--preset");
  app.add_option("--duration", opt.duration,
                 "Override run duration, e.g. 30s, 250ms");
  app.add_option("--warmup", opt.warmup,
                 "Discard metrics before this time, e.g. 1s");
  app.add_option("--scheduler", opt.scheduler,
                 "Override the scheduling policy")
      ->check(CLI::IsMember({"mcdrr", "rr-baseline"}));
  app.add_option("--seeds", opt.seeds,
                 "Comma-separated seed sweep, e.g. 1,2,3 (default: the "
                 "scenario's seed)");
  app.add_option("--out", opt.out_dir, "Output directory (default .)");
  app.add_option("--format", opt.format, "Report files to write")
      ->check(CLI::IsMember({"csv", "json", "both"}));
  app.add_option("--jobs", opt.jobs,
                 "Worker threads for multi-seed sweeps (default 1)")
      ->check(CLI::Range(1u, 256u));
  app.add_flag("--audit", opt.audit,
               "Re-verify structural invariants after every event");
  app.add_flag("--print-config", opt.print_config,
               "Print the effective scenario text and exit");
  app.add_flag("--list-presets", opt.list_presets, "List presets and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  if (opt.list_presets) {
    for (const std::string& name : mcdrr::preset_names()) {
      std::cout << name << "\n";
    }
    return kExitOk;
  }
  if (opt.preset.empty() == opt.scenario_path.empty()) {
    std::cerr << "error: exactly one of --preset or --scenario is required\n";
    return kExitParse;
  }

  try {
    return run(opt);
  } catch (const mcdrr::ScenarioParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const mcdrr::ScenarioValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const mcdrr::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
