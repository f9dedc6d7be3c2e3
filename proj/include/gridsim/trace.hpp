// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "gridsim/engine.hpp"

namespace gridsim {

/// One applied update in the run's ordered log.
struct TraceEvent {
  std::uint64_t step = 0;
  std::string agent;
  std::string rule;
  Location loc;
  Value old_value;  // the pre-state's interpretation
  Value new_value;
};

using Trace = std::vector<TraceEvent>;

/// step<TAB>agent<TAB>rule<TAB>location<TAB>old<TAB>new, one line per
/// update, firing order. Byte-identical across runs of the same scenario
/// and seed.
void write_trace(std::ostream& os, const Trace& trace);
std::string format_trace(const Trace& trace);

/// Applies the trace's update stream step by step from `initial`.
GridState replay(GridState initial, const Trace& trace);

}  // namespace gridsim
