// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "gridsim/engine.hpp"
#include "gridsim/model.hpp"
#include "gridsim/scenario.hpp"

namespace gridsim::rules {

// Rule names as they appear in traces.
inline constexpr const char* resource_selection_rule = "resource_selection";
inline constexpr const char* resource_mapping_rule = "resource_mapping";
inline constexpr const char* state_transition_rule = "state_transition";
inline constexpr const char* termination_rule = "termination";
inline constexpr const char* grant_rule = "grant_occupancy";

/// Resource selection: picks up the mapped resources for the job's processes. Direct
/// resources install the process's task at the resource location; handled
/// resources get a handler process imported from the reserve on first use.
/// Requesting processes are enqueued on the resource (uses + enqueuedAt).
void resource_selection(StepContext& ctx, const EntityIndex& ix, const std::string& job);

/// The resource-mapping agent's program for one job: for every open
/// (process, abstract resource) request, chooses a compatible resource of
/// the mapped host and stages mappedResource.
void resource_mapping(StepContext& ctx, const EntityIndex& ix, const std::string& job);

/// Grants a free resource to the FIFO head of its queue, and clears or
/// re-grants resources whose occupant is no longer a live process.
void grant_occupancy(StepContext& ctx, const EntityIndex& ix, const std::string& host);

/// State transition: job/process state evolution, staged as a prioritized cascade
/// (failed > running > waiting > submitted) so simultaneous guards cannot
/// conflict, with updates staged only on value change. In meta mode the
/// broker-submission extension applies (submitted(j,b) => submitted,
/// submitted(j,h) => waiting); in local/broker modes a host submission
/// means submitted. The abort branch fails the job and removes the
/// processes using resources at the aborted location.
void state_transition(StepContext& ctx, const EntityIndex& ix, const std::string& job,
                      SimMode mode);

/// Termination: terminate events on running processes remove them and release
/// their resources (FIFO promotion in the same step); a failed job loses
/// all processes; a running job with no processes left is done.
void termination(StepContext& ctx, const EntityIndex& ix, const std::string& job);

}  // namespace gridsim::rules
