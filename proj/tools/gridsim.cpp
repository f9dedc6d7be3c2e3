// SPDX-License-Identifier: Apache-2.0
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gridsim/model.hpp"
#include "gridsim/run.hpp"
#include "gridsim/scenario_io.hpp"
#include "gridsim/state.hpp"
#include "gridsim/trace.hpp"

namespace {

// 0: all jobs done; 2: some jobs failed or unfinished; 3: engine fault;
// 4: scenario error.
constexpr int exit_ok = 0;
constexpr int exit_some_failed = 2;
constexpr int exit_engine_fault = 3;
constexpr int exit_scenario_error = 4;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"three-level grid brokering simulator"};
  app.require_subcommand(1);

  CLI::App* run_cmd = app.add_subcommand("run", "run a scenario");
  std::string scenario_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> max_steps;
  std::optional<std::string> trace_path;
  std::optional<std::string> report_path;
  std::optional<std::string> mode_flag;
  std::optional<std::string> matchmaking_flag;

  run_cmd->add_option("--scenario", scenario_path, "scenario file")->required();
  run_cmd->add_option("--seed", seed, "seed for seeded choose (selects seeded mode)");
  run_cmd->add_option("--max-steps", max_steps, "step limit override");
  run_cmd->add_option("--trace", trace_path, "write the TSV trace here");
  run_cmd->add_option("--report", report_path, "write the report here (default: stdout)");
  run_cmd->add_option("--mode", mode_flag, "local|broker|meta")
      ->check(CLI::IsMember({"local", "broker", "meta"}));
  run_cmd->add_option("--matchmaking", matchmaking_flag, "base|refined")
      ->check(CLI::IsMember({"base", "refined"}));

  CLI11_PARSE(app, argc, argv);

  std::ifstream in(scenario_path);
  if (!in) {
    std::cerr << "error: cannot open scenario file " << scenario_path << "\n";
    return exit_scenario_error;
  }

  gridsim::Scenario scenario;
  try {
    scenario = gridsim::parse_scenario(in);
  } catch (const gridsim::ScenarioError& e) {
    std::cerr << "error: " << scenario_path << ": " << e.what() << "\n";
    return exit_scenario_error;
  }

  gridsim::RunOverrides overrides;
  overrides.seed = seed;
  overrides.max_steps = max_steps;
  if (mode_flag) {
    overrides.mode = *mode_flag == "local"    ? gridsim::SimMode::local
                     : *mode_flag == "broker" ? gridsim::SimMode::broker
                                              : gridsim::SimMode::meta;
  }
  if (matchmaking_flag) {
    overrides.matchmaking = *matchmaking_flag == "refined" ? gridsim::Matchmaking::refined
                                                           : gridsim::Matchmaking::base;
  }
  scenario = gridsim::apply_overrides(std::move(scenario), overrides);

  auto issues = gridsim::validate_scenario(scenario);
  if (!issues.empty()) {
    for (const auto& i : issues) std::cerr << "error: [" << i.code << "] " << i.message << "\n";
    return exit_scenario_error;
  }

  gridsim::RunResult result;
  try {
    result = gridsim::run(scenario);
  } catch (const gridsim::EngineFault& e) {
    std::cerr << "engine fault: " << e.what() << "\n";
    return exit_engine_fault;
  } catch (const gridsim::InitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_scenario_error;
  }

  if (trace_path) {
    std::ofstream out(*trace_path);
    if (!out) {
      std::cerr << "error: cannot write trace file " << *trace_path << "\n";
      return exit_scenario_error;
    }
    gridsim::write_trace(out, result.trace);
  }

  std::string report_text = gridsim::format_report(result.report, scenario);
  if (report_path) {
    std::ofstream out(*report_path);
    if (!out) {
      std::cerr << "error: cannot write report file " << *report_path << "\n";
      return exit_scenario_error;
    }
    out << report_text;
    std::cout << gridsim::format_metrics(gridsim::compute_metrics(result.report));
  } else {
    std::cout << report_text << "\n"
              << gridsim::format_metrics(gridsim::compute_metrics(result.report));
  }

  bool all_done = true;
  for (const auto& [job, out] : result.report.jobs) {
    (void)job;
    all_done = all_done && out.status == gridsim::JobStatus::done;
  }
  return all_done ? exit_ok : exit_some_failed;
}
