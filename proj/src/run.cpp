// SPDX-License-Identifier: Apache-2.0
#include "gridsim/run.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gridsim/brokering.hpp"
#include "gridsim/read.hpp"
#include "gridsim/rules.hpp"
#include "gridsim/scenario_io.hpp"

namespace gridsim {

const char* to_string(JobStatus s) {
  switch (s) {
    case JobStatus::done: return "done";
    case JobStatus::failed: return "failed";
    case JobStatus::unsatisfiable: return "unsatisfiable";
    case JobStatus::in_flight: return "in-flight";
  }
  return "?";
}

Scenario apply_overrides(Scenario scenario, const RunOverrides& o) {
  if (o.seed) {
    scenario.config.choose.mode = ChooseMode::seeded;
    scenario.config.choose.seed = *o.seed;
  }
  if (o.max_steps) scenario.config.max_steps = *o.max_steps;
  if (o.mode) scenario.config.mode = *o.mode;
  if (o.matchmaking) scenario.config.matchmaking = *o.matchmaking;
  return scenario;
}

namespace {

struct StallEntry {
  std::uint64_t first_step = 0;
  std::uint64_t count = 0;
};

std::set<std::string> flatten_members(const GridState& s) {
  std::set<std::string> out;
  for (const auto& [name, members] : s.universes()) {
    (void)name;
    out.insert(members.begin(), members.end());
  }
  return out;
}

}  // namespace

RunResult run(const Scenario& scenario) {
  {
    auto issues = validate_scenario(scenario);
    if (!issues.empty()) {
      std::string msg = "invalid scenario:";
      for (const auto& i : issues) msg += "\n  [" + i.code + "] " + i.message;
      throw InitError(msg);
    }
  }

  const SimMode mode = scenario.config.mode;
  const Matchmaking matchmaking = scenario.config.matchmaking;
  EntityIndex ix = build_index(scenario);
  GridState state = init_state(scenario);

  RunResult result;
  result.initial_state = state;

  // Driver-owned overlays.
  std::map<std::uint64_t, std::vector<FaultDecl>> faults_by_step;
  std::uint64_t last_fault_step = 0;
  for (const auto& f : scenario.faults) {
    faults_by_step[f.at].push_back(f);
    last_fault_step = std::max(last_fault_step, f.at);
  }
  std::vector<std::string> pending_stall_failures;           // staged next step
  std::map<std::string, std::string> failure_reason;         // job -> reason
  std::set<std::string> unsat_marked;                        // report-level failures
  std::map<std::string, std::uint64_t> unsat_step;
  std::map<std::string, std::uint64_t> stall_counter;        // "job/layer" -> count
  std::map<std::string, StallEntry> stall_notes;             // detail -> occurrence

  std::vector<Agent> agents;

  agents.push_back(Agent{"env", [&](StepContext& ctx) {
    ctx.rule("inject_fault");
    auto it = faults_by_step.find(ctx.step());
    if (it != faults_by_step.end()) {
      for (const FaultDecl& f : it->second) {
        const char* kind = f.kind == FaultKind::abort_task ? kw::abort : kw::terminate;
        ctx.stage({fn::event, {task_id(f.process)}}, std::string(kind));
      }
    }
    ctx.rule("stall_unsatisfiable");
    for (const std::string& job : pending_stall_failures) {
      auto st = sym(ctx.state(), {fn::job_state, {job}});
      if (st == std::string(kw::submitted) || st == std::string(kw::waiting) ||
          st == std::string(kw::running)) {
        ctx.stage({fn::job_state, {job}}, std::string(kw::failed));
      }
    }
  }});

  if (mode == SimMode::meta) {
    agents.push_back(Agent{"metabroker", [&, matchmaking](StepContext& ctx) {
      for (const std::string& job : ix.job_ids) {
        brokering::broker_selection(ctx, ix, job);
        if (matchmaking == Matchmaking::refined) {
          brokering::refined_broker_mapping(ctx, ix, job);
        } else {
          brokering::broker_mapping(ctx, ix, job);
        }
      }
    }});
    for (const std::string& broker : ix.broker_ids) {
      agents.push_back(Agent{"broker:" + broker, [&, broker, matchmaking](StepContext& ctx) {
        for (const std::string& job : ix.job_ids) {
          if (!is_true(ctx.state(), {fn::submitted, {job, broker}})) continue;
          brokering::host_selection(ctx, ix, job);
          if (matchmaking == Matchmaking::refined) {
            brokering::refined_host_mapping(ctx, ix, job);
          } else {
            brokering::host_mapping(ctx, ix, job);
          }
        }
      }});
    }
  } else if (mode == SimMode::broker) {
    agents.push_back(Agent{"broker", [&, matchmaking](StepContext& ctx) {
      for (const std::string& job : ix.job_ids) {
        brokering::host_selection(ctx, ix, job);
        if (matchmaking == Matchmaking::refined) {
          brokering::refined_host_mapping(ctx, ix, job);
        } else {
          brokering::host_mapping(ctx, ix, job);
        }
      }
    }});
  }

  for (const std::string& host : ix.host_ids) {
    agents.push_back(Agent{"lrm:" + host, [&, host](StepContext& ctx) {
      for (const std::string& job : ix.job_ids) {
        if (sym(ctx.state(), {fn::mapped_host, {job}}) == host) {
          rules::resource_mapping(ctx, ix, job);
        }
      }
      rules::grant_occupancy(ctx, ix, host);
    }});
  }

  for (const std::string& job : ix.job_ids) {
    agents.push_back(Agent{job, [&, job, mode](StepContext& ctx) {
      rules::resource_selection(ctx, ix, job);
      rules::state_transition(ctx, ix, job, mode);
      rules::termination(ctx, ix, job);
    }});
  }

  auto job_terminal = [&](const std::string& job) {
    if (unsat_marked.count(job)) return true;
    auto st = sym(state, {fn::job_state, {job}});
    return st == std::string(kw::done) || st == std::string(kw::failed);
  };

  // Perf history starts with the initial value of every broker.
  for (const std::string& b : ix.broker_ids) {
    auto& out = result.report.brokers[b];
    out.dynamic = ix.brokers.at(b)->perf.dynamic;
    out.perf_history.emplace_back(0, brokering::broker_perf(state, ix, b));
  }

  std::uint64_t step_no = 0;
  for (;; ++step_no) {
    bool all_terminal = std::all_of(ix.job_ids.begin(), ix.job_ids.end(), job_terminal);
    if (all_terminal) break;
    if (step_no >= scenario.config.max_steps) {
      result.report.max_steps_hit = true;
      break;
    }

    std::set<std::string> pre_members = flatten_members(state);
    StepResult sr = step(state, agents, scenario.config.choose, step_no);
    pending_stall_failures.clear();

    // Trace + dangling-element lint.
    std::set<std::string> fresh;
    for (const FiredUpdate& f : sr.fired) {
      if (state.is_universe(f.loc.fn) && f.new_value == Value{true} &&
          !pre_members.count(f.loc.args.at(0))) {
        fresh.insert(f.loc.args.at(0));
      }
    }
    for (const FiredUpdate& f : sr.fired) {
      result.trace.push_back(TraceEvent{step_no, f.agent, f.rule, f.loc, f.old_value,
                                        f.new_value});
      for (const std::string& arg : f.loc.args) {
        if (arg != "undef" && !pre_members.count(arg) && !fresh.count(arg)) {
          result.report.lint.push_back("step " + std::to_string(step_no) + ": " + f.agent + "/" +
                                       f.rule + " wrote " + to_string(f.loc) +
                                       " mentioning non-member " + arg);
        }
      }
    }

    // Mapping stalls: one count per (job, layer) per step; a trip schedules
    // the failure for the next step's env agent.
    std::set<std::pair<std::string, std::string>> stalled_now;
    for (const StallNote& n : sr.stalls) stalled_now.insert({n.job, n.layer});
    for (auto it = stall_counter.begin(); it != stall_counter.end();) {
      std::string job = it->first.substr(0, it->first.find('/'));
      std::string layer = it->first.substr(it->first.find('/') + 1);
      if (!stalled_now.count({job, layer})) {
        it = stall_counter.erase(it);
      } else {
        ++it;
      }
    }
    for (const auto& [job, layer] : stalled_now) {
      if (job_terminal(job)) continue;
      std::uint64_t& c = stall_counter[job + "/" + layer];
      ++c;
      if (c >= scenario.config.stall_limit) {
        std::string reason = "unsatisfiable (" + layer + " mapping)";
        auto st = sym(state, {fn::job_state, {job}});
        if (st == std::string(kw::submitted) || st == std::string(kw::waiting) ||
            st == std::string(kw::running)) {
          if (!failure_reason.count(job)) {
            pending_stall_failures.push_back(job);
            failure_reason[job] = reason;
          }
        } else if (!unsat_marked.count(job)) {
          unsat_marked.insert(job);
          unsat_step[job] = step_no;
          failure_reason[job] = reason;
        }
        stall_counter.erase(job + "/" + layer);
      }
    }
    std::sort(pending_stall_failures.begin(), pending_stall_failures.end());

    for (const AgentNote& n : sr.notes) {
      std::string detail = n.category + ": " + n.detail;
      auto [it, inserted] = stall_notes.try_emplace(detail, StallEntry{step_no, 0});
      (void)inserted;
      ++it->second.count;
    }

    for (const std::string& b : ix.broker_ids) {
      double perf = brokering::broker_perf(state, ix, b);
      auto& hist = result.report.brokers[b].perf_history;
      if (hist.back().second != perf) hist.emplace_back(step_no, perf);
    }

    bool future_faults = last_fault_step > step_no && !scenario.faults.empty();
    if (sr.quiescent && stalled_now.empty() && pending_stall_failures.empty() &&
        !future_faults) {
      ++step_no;  // the quiescent step ran
      result.report.hung = !std::all_of(ix.job_ids.begin(), ix.job_ids.end(), job_terminal);
      break;
    }
  }
  result.report.steps = step_no;

  // Per-job outcomes.
  for (const std::string& job : ix.job_ids) {
    JobOutcome out;
    auto st = sym(state, {fn::job_state, {job}});
    out.final_state = st.value_or("undef");
    out.broker = sym(state, {fn::mapped_broker, {job}});
    out.host = sym(state, {fn::mapped_host, {job}});

    std::optional<std::uint64_t> prev_step;
    std::string prev_state = "undef";
    for (const TraceEvent& e : result.trace) {
      if (e.loc.fn != fn::job_state || e.loc.args.at(0) != job) continue;
      std::string to = to_string(e.new_value);
      if (to == kw::submitted && !out.submitted_step) out.submitted_step = e.step;
      if (to == kw::done || to == kw::failed) out.terminal_step = e.step;
      if (prev_step) out.steps_in_state[prev_state] += e.step - *prev_step;
      prev_step = e.step;
      prev_state = to;
    }
    if (prev_step) out.steps_in_state[prev_state] += result.report.steps - *prev_step;

    if (unsat_marked.count(job)) {
      out.status = JobStatus::unsatisfiable;
      out.terminal_step = unsat_step[job];
      out.reason = failure_reason[job];
    } else if (st == std::string(kw::done)) {
      out.status = JobStatus::done;
    } else if (st == std::string(kw::failed)) {
      out.status = JobStatus::failed;
      if (failure_reason.count(job)) {
        out.reason = failure_reason[job];
      } else {
        // The only in-model failure path is the abort event.
        out.reason = "abort";
      }
    } else {
      out.status = JobStatus::in_flight;
      out.reason = result.report.hung ? "hung" : "max-steps";
    }
    result.report.jobs[job] = out;
  }

  // Per-broker outcomes from the final state.
  for (const std::string& b : ix.broker_ids) {
    BrokerOutcome& out = result.report.brokers[b];
    for (const std::string& j : ix.job_ids) {
      if (!is_true(state, {fn::submitted, {j, b}})) continue;
      ++out.submitted;
      auto st = sym(state, {fn::job_state, {j}});
      if (st == std::string(kw::done)) ++out.done;
      if (st == std::string(kw::failed)) ++out.failed;
    }
    std::uint64_t finished = out.done + out.failed;
    out.success_ratio =
        finished == 0 ? 1.0 : static_cast<double>(out.done) / static_cast<double>(finished);
  }

  std::vector<std::pair<std::uint64_t, std::string>> ordered_notes;
  for (const auto& [detail, entry] : stall_notes) {
    ordered_notes.emplace_back(entry.first_step, "step " + std::to_string(entry.first_step) +
                                                     ": " + detail + " (x" +
                                                     std::to_string(entry.count) + ")");
  }
  std::sort(ordered_notes.begin(), ordered_notes.end());
  for (auto& [_, line] : ordered_notes) result.report.stall_log.push_back(std::move(line));

  result.final_state = state;
  return result;
}

std::string format_report(const RunReport& report, const Scenario& scenario) {
  std::ostringstream os;
  std::uint64_t done = 0, failed = 0;
  for (const auto& [job, out] : report.jobs) {
    (void)job;
    if (out.status == JobStatus::done) ++done;
    if (out.status == JobStatus::failed || out.status == JobStatus::unsatisfiable) ++failed;
  }
  os << "mode = " << to_string(scenario.config.mode) << "\n";
  os << "matchmaking = " << to_string(scenario.config.matchmaking) << "\n";
  os << "steps = " << report.steps << "\n";
  os << "jobs_total = " << report.jobs.size() << "\n";
  os << "jobs_done = " << done << "\n";
  os << "jobs_failed = " << failed << "\n";
  os << "done_fraction = "
     << format_real(report.jobs.empty()
                        ? 0.0
                        : static_cast<double>(done) / static_cast<double>(report.jobs.size()))
     << "\n";
  if (report.max_steps_hit) os << "max_steps_hit = true\n";
  if (report.hung) os << "hung = true\n";

  for (const auto& [job, out] : report.jobs) {
    os << "\n[job " << job << "]\n";
    os << "status = " << to_string(out.status) << "\n";
    os << "state = " << out.final_state << "\n";
    if (!out.reason.empty()) os << "reason = " << out.reason << "\n";
    if (out.broker) os << "broker = " << *out.broker << "\n";
    if (out.host) os << "host = " << *out.host << "\n";
    if (out.submitted_step) os << "submitted_step = " << *out.submitted_step << "\n";
    if (out.terminal_step) os << "terminal_step = " << *out.terminal_step << "\n";
    for (const auto& [st, n] : out.steps_in_state) os << "in_" << st << " = " << n << "\n";
  }

  for (const auto& [broker, out] : report.brokers) {
    os << "\n[broker " << broker << "]\n";
    os << "perf = " << (out.dynamic ? "dynamic" : "static") << "\n";
    os << "submitted = " << out.submitted << "\n";
    os << "done = " << out.done << "\n";
    os << "failed = " << out.failed << "\n";
    os << "success_ratio = " << format_real(out.success_ratio) << "\n";
    os << "perf_history =";
    for (const auto& [step, perf] : out.perf_history) {
      os << " " << step << ":" << format_real(perf);
    }
    os << "\n";
  }

  if (!report.stall_log.empty()) {
    os << "\n[stalls]\n";
    for (const auto& line : report.stall_log) os << line << "\n";
  }
  if (!report.lint.empty()) {
    os << "\n[lint]\n";
    for (const auto& line : report.lint) os << line << "\n";
  }
  return os.str();
}

Metrics compute_metrics(const RunReport& report) {
  Metrics m;
  std::uint64_t done = 0;
  for (const auto& [job, out] : report.jobs) {
    if (out.status == JobStatus::done) ++done;
    std::uint64_t end = out.terminal_step.value_or(report.steps);
    std::uint64_t start = out.submitted_step.value_or(0);
    m.makespan[job] = end >= start ? end - start : 0;
  }
  for (const auto& [broker, out] : report.brokers) m.broker_ratio[broker] = out.success_ratio;
  m.done_fraction = report.jobs.empty()
                        ? 0.0
                        : static_cast<double>(done) / static_cast<double>(report.jobs.size());
  return m;
}

std::string format_metrics(const Metrics& m) {
  std::ostringstream os;
  os << "done_fraction = " << format_real(m.done_fraction) << "\n";
  for (const auto& [job, steps] : m.makespan) {
    os << "makespan " << job << " = " << steps << "\n";
  }
  for (const auto& [broker, ratio] : m.broker_ratio) {
    os << "success_ratio " << broker << " = " << format_real(ratio) << "\n";
  }
  return os.str();
}

}  // namespace gridsim
