// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gridsim/model.hpp"
#include "gridsim/scenario.hpp"
#include "gridsim/trace.hpp"

namespace gridsim {

/// Why a job is not done.
enum class JobStatus { done, failed, unsatisfiable, in_flight };

const char* to_string(JobStatus s);

struct JobOutcome {
  JobStatus status = JobStatus::in_flight;
  std::string final_state = "undef";  // jobState at the end of the run
  std::string reason;                 // "unsatisfiable (broker)", "abort", ...
  std::optional<std::string> broker;
  std::optional<std::string> host;
  std::optional<std::uint64_t> submitted_step;  // first step jobState = submitted
  std::optional<std::uint64_t> terminal_step;   // step of done/failed (or unsat mark)
  std::map<std::string, std::uint64_t> steps_in_state;
};

struct BrokerOutcome {
  std::uint64_t submitted = 0;
  std::uint64_t done = 0;
  std::uint64_t failed = 0;
  double success_ratio = 1.0;
  bool dynamic = false;
  std::vector<std::pair<std::uint64_t, double>> perf_history;  // (step, perf) on change
};

struct RunReport {
  std::map<std::string, JobOutcome> jobs;
  std::map<std::string, BrokerOutcome> brokers;
  std::vector<std::string> stall_log;  // human-readable stall/authorization notes
  std::vector<std::string> lint;       // dangling-element writes (should stay empty)
  std::uint64_t steps = 0;
  bool max_steps_hit = false;
  bool hung = false;
};

struct RunResult {
  RunReport report;
  Trace trace;
  GridState initial_state;
  GridState final_state;
};

/// Flag-level overrides on top of the scenario's [config].
struct RunOverrides {
  std::optional<std::uint64_t> seed;  // also selects seeded choose
  std::optional<std::uint64_t> max_steps;
  std::optional<SimMode> mode;
  std::optional<Matchmaking> matchmaking;
};

Scenario apply_overrides(Scenario scenario, const RunOverrides& overrides);

/// Steps the multi-agent machine until every job is done or failed, the
/// system provably cannot advance, or max_steps is exhausted. Throws
/// EngineFault on an inconsistent update set and InitError on scenarios
/// that violate an initial-state clause.
RunResult run(const Scenario& scenario);

std::string format_report(const RunReport& report, const Scenario& scenario);

/// Summary metrics derived from a report.
struct Metrics {
  std::map<std::string, std::uint64_t> makespan;  // per job
  std::map<std::string, double> broker_ratio;
  double done_fraction = 0.0;
};

Metrics compute_metrics(const RunReport& report);
std::string format_metrics(const Metrics& m);

}  // namespace gridsim
