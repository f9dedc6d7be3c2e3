// SPDX-License-Identifier: Apache-2.0
#include "gridsim/trace_check.hpp"

#include <map>
#include <set>

#include "gridsim/read.hpp"

namespace gridsim {

namespace {

bool allowed_edge(const std::string& from, const std::string& to, bool allow_stall_undef) {
  if (from == "undef") return to == kw::submitted || (allow_stall_undef && to == kw::failed);
  if (from == kw::submitted) return to == kw::waiting || to == kw::failed;
  if (from == kw::waiting) return to == kw::running || to == kw::failed;
  if (from == kw::running) {
    return to == kw::waiting || to == kw::done || to == kw::failed;
  }
  return false;  // done and failed are absorbing
}

}  // namespace

std::vector<std::string> check_trajectories(const Trace& trace, const TraceCheckOptions& opts) {
  std::vector<std::string> violations;
  std::map<std::string, std::string> current;  // job -> last seen state
  for (const TraceEvent& e : trace) {
    if (e.loc.fn != fn::job_state) continue;
    const std::string& job = e.loc.args.at(0);
    std::string from = to_string(e.old_value);
    std::string to = to_string(e.new_value);
    auto it = current.find(job);
    std::string tracked = it == current.end() ? "undef" : it->second;
    if (tracked != from) {
      violations.push_back("job " + job + ": trace gap, old value " + from +
                           " does not match tracked state " + tracked + " at step " +
                           std::to_string(e.step));
    }
    if (!allowed_edge(from, to, opts.allow_stall_failure_from_undef)) {
      violations.push_back("job " + job + ": forbidden transition " + from + " -> " + to +
                           " at step " + std::to_string(e.step));
    }
    current[job] = to;
  }
  return violations;
}

std::vector<std::string> check_layer_ordering(const Trace& trace, const TraceCheckOptions& opts) {
  std::vector<std::string> violations;
  if (opts.mode != SimMode::meta) return violations;

  struct Marks {
    std::size_t mapped_broker = SIZE_MAX;
    std::size_t submitted_broker = SIZE_MAX;
    std::size_t mapped_host = SIZE_MAX;
    std::size_t submitted_host = SIZE_MAX;
  };
  std::map<std::string, Marks> marks;
  std::map<std::string, std::string> broker_of;

  for (std::size_t i = 0; i < trace.size(); ++i) {
    const TraceEvent& e = trace[i];
    if (e.loc.fn == fn::mapped_broker) {
      auto& m = marks[e.loc.args.at(0)];
      if (m.mapped_broker == SIZE_MAX) m.mapped_broker = i;
      broker_of[e.loc.args.at(0)] = to_string(e.new_value);
    } else if (e.loc.fn == fn::mapped_host) {
      auto& m = marks[e.loc.args.at(0)];
      if (m.mapped_host == SIZE_MAX) m.mapped_host = i;
    } else if (e.loc.fn == fn::submitted && e.new_value == Value{true}) {
      const std::string& job = e.loc.args.at(0);
      const std::string& target = e.loc.args.at(1);
      auto& m = marks[job];
      if (broker_of.count(job) && broker_of[job] == target) {
        if (m.submitted_broker == SIZE_MAX) m.submitted_broker = i;
      } else if (m.submitted_host == SIZE_MAX) {
        m.submitted_host = i;
      }
    }
  }

  for (const auto& [job, m] : marks) {
    auto check = [&](std::size_t a, std::size_t b, const char* what) {
      if (a != SIZE_MAX && b != SIZE_MAX && !(a < b)) {
        violations.push_back("job " + job + ": layer ordering violated (" + what + ")");
      }
      if (a == SIZE_MAX && b != SIZE_MAX) {
        violations.push_back("job " + job + ": later layer event without earlier (" +
                             std::string(what) + ")");
      }
    };
    check(m.mapped_broker, m.submitted_broker, "mappedBroker < submitted(j,b)");
    check(m.submitted_broker, m.mapped_host, "submitted(j,b) < mappedHost");
    check(m.mapped_host, m.submitted_host, "mappedHost < submitted(j,h)");
  }
  return violations;
}

std::vector<std::string> check_mode_events(const Trace& trace, const TraceCheckOptions& opts) {
  std::vector<std::string> violations;
  for (const TraceEvent& e : trace) {
    bool broker_mapping = e.rule == "broker_mapping" || e.loc.fn == fn::mapped_broker;
    bool host_mapping = e.rule == "host_mapping" || e.loc.fn == fn::mapped_host;
    if (opts.mode == SimMode::local && (broker_mapping || host_mapping)) {
      violations.push_back("local mode emitted mapping event at step " + std::to_string(e.step) +
                           ": " + to_string(e.loc));
    }
    if (opts.mode == SimMode::broker && broker_mapping) {
      violations.push_back("broker mode emitted broker-mapping event at step " +
                           std::to_string(e.step) + ": " + to_string(e.loc));
    }
  }
  return violations;
}

std::vector<std::string> check_replayed_states(const GridState& initial, const Trace& trace) {
  std::vector<std::string> violations;
  std::map<std::string, std::set<std::string>> handlers_seen;  // pr -> handler values

  GridState state = initial;
  std::size_t i = 0;
  std::uint64_t step = 0;

  auto check_state = [&violations, &step](const GridState& s) {
    for (const std::string& p : s.members(uni::process)) {
      if (sym(s, {fn::proc_state, {p}}) != std::string(kw::running)) continue;
      for (const std::string& pr : used_resources(s, p)) {
        if (sym(s, {fn::occupant, {pr}}) != p) {
          violations.push_back("step " + std::to_string(step) + ": running process " + p +
                               " does not occupy used resource " + pr);
        }
      }
    }
    for (const std::string& j : s.members(uni::job)) {
      if (sym(s, {fn::job_state, {j}}) == std::string(kw::done) &&
          !processes_of_job(s, j).empty()) {
        violations.push_back("step " + std::to_string(step) + ": done job " + j +
                             " still has live processes");
      }
    }
    for (const std::string& ar : s.members(uni::aresource)) {
      if (!s.is_member(uni::requirement, ar)) {
        violations.push_back("subset violation: abstract resource " + ar +
                             " is not a requirement");
      }
    }
    for (const std::string& pr : s.members(uni::presource)) {
      if (!s.is_member(uni::property, pr)) {
        violations.push_back("subset violation: physical resource " + pr + " is not a property");
      }
    }
  };

  check_state(state);
  while (i < trace.size()) {
    step = trace[i].step;
    UpdateSet set;
    while (i < trace.size() && trace[i].step == step) {
      const TraceEvent& e = trace[i];
      if (e.loc.fn == fn::handler && !is_undef(e.new_value)) {
        handlers_seen[e.loc.args.at(0)].insert(to_string(e.new_value));
      }
      if (e.loc.fn == fn::uses && e.new_value == Value{true}) {
        // a process starts using a resource only after the mapping agent
        // assigned it for one of its requests
        const std::string& p = e.loc.args.at(0);
        const std::string& pr = e.loc.args.at(1);
        bool assigned = false;
        for (const std::string& ar : state.members(uni::aresource)) {
          if (sym(state, {fn::mapped_resource, {p, ar}}) == pr) assigned = true;
        }
        if (!assigned) {
          violations.push_back("step " + std::to_string(step) + ": " + p + " uses " + pr +
                               " without a mappedResource assignment");
        }
      }
      set.stage(e.loc, e.new_value);
      ++i;
    }
    state.fire(set);
    check_state(state);
  }

  for (const auto& [pr, hs] : handlers_seen) {
    if (hs.size() > 1) {
      violations.push_back("resource " + pr + " acquired " + std::to_string(hs.size()) +
                           " handlers over the run");
    }
  }
  return violations;
}

}  // namespace gridsim
