// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "gridsim/model.hpp"
#include "gridsim/scenario.hpp"
#include "gridsim/trace.hpp"

namespace gridsim {

struct TraceCheckOptions {
  SimMode mode = SimMode::meta;
  /// Stall-policy failures may fail a job that never left undef; the
  /// rule-level transition graph does not contain that edge.
  bool allow_stall_failure_from_undef = false;
};

/// Scans jobState transitions per job against the allowed graph
/// undef -> submitted -> waiting <-> running -> done|failed, with failed
/// reachable from submitted/waiting/running. Returns one line per
/// violation.
std::vector<std::string> check_trajectories(const Trace& trace, const TraceCheckOptions& opts);

/// Meta mode: per job, mappedBroker precedes submitted(j,b), which
/// precedes mappedHost, which precedes submitted(j,h) in trace order.
std::vector<std::string> check_layer_ordering(const Trace& trace, const TraceCheckOptions& opts);

/// Local mode emits no host/broker mapping events; broker mode emits no
/// broker-mapping events.
std::vector<std::string> check_mode_events(const Trace& trace, const TraceCheckOptions& opts);

/// Replays the trace from the initial state and checks per-step safety:
/// every running process occupies every resource it uses, no resource has
/// two running users, done jobs have no live processes, subset universes
/// hold (ARESOURCE within REQUIREMENT, PRESOURCE within PROPERTY), and a
/// handled resource acquires at most one handler over the run.
std::vector<std::string> check_replayed_states(const GridState& initial, const Trace& trace);

}  // namespace gridsim
