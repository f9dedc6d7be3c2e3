// SPDX-License-Identifier: Apache-2.0
#include "gridsim/trace.hpp"

#include <sstream>

namespace gridsim {

void write_trace(std::ostream& os, const Trace& trace) {
  for (const TraceEvent& e : trace) {
    os << e.step << '\t' << e.agent << '\t' << e.rule << '\t' << to_string(e.loc) << '\t'
       << to_string(e.old_value) << '\t' << to_string(e.new_value) << '\n';
  }
}

std::string format_trace(const Trace& trace) {
  std::ostringstream os;
  write_trace(os, trace);
  return os.str();
}

GridState replay(GridState initial, const Trace& trace) {
  std::size_t i = 0;
  while (i < trace.size()) {
    std::uint64_t step = trace[i].step;
    UpdateSet set;
    while (i < trace.size() && trace[i].step == step) {
      set.stage(trace[i].loc, trace[i].new_value);
      ++i;
    }
    initial.fire(set);
  }
  return initial;
}

}  // namespace gridsim
