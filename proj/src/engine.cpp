// SPDX-License-Identifier: Apache-2.0
#include "gridsim/engine.hpp"

#include <algorithm>

namespace gridsim {

void StepContext::stage(Location loc, Value value) {
  state_.signature().check_update(loc, value);
  staged_.stage(std::move(loc), std::move(value));
  attribution_.emplace_back(agent_, rule_);
}

std::string StepContext::extend(const std::string& universe) {
  if (!state_.is_universe(universe)) throw SignatureError("undeclared universe: " + universe);
  std::string fresh = universe + "#" + std::to_string(next_reserve_);
  while (state_.any_universe_contains(fresh)) {
    ++next_reserve_;
    fresh = universe + "#" + std::to_string(next_reserve_);
  }
  ++next_reserve_;
  stage(Location{universe, {fresh}}, true);
  return fresh;
}

void StepContext::note(std::string category, std::string detail) {
  notes_.push_back(AgentNote{agent_, std::move(category), std::move(detail)});
}

StepResult step(GridState& state, const std::vector<Agent>& agents, const ChoosePolicy& policy,
                std::uint64_t step_no) {
  StepContext ctx(state, step_no, policy);
  for (const Agent& agent : agents) {
    ctx.agent_ = agent.id;
    ctx.rule_.clear();
    agent.program(ctx);
  }

  ConsistencyReport report = check_consistency(ctx.staged());
  if (!report.ok()) {
    std::vector<std::string> blamed;
    const auto& updates = ctx.staged().updates();
    for (const auto& conflict : report.conflicts) {
      for (std::size_t i = 0; i < updates.size(); ++i) {
        if (updates[i].loc == conflict.loc) {
          const std::string& agent = ctx.attribution_[i].first;
          if (std::find(blamed.begin(), blamed.end(), agent) == blamed.end())
            blamed.push_back(agent);
        }
      }
    }
    std::string msg = "step " + std::to_string(step_no) + ": " + report.to_string() + "\nagents:";
    for (const auto& a : blamed) msg += " " + a;
    throw EngineFault(std::move(msg), std::move(report), std::move(blamed));
  }

  StepResult result;
  result.quiescent = ctx.staged().empty();
  const auto& updates = ctx.staged().updates();
  result.fired.reserve(updates.size());
  for (std::size_t i = 0; i < updates.size(); ++i) {
    result.fired.push_back(FiredUpdate{ctx.attribution_[i].first, ctx.attribution_[i].second,
                                       updates[i].loc, state.read(updates[i].loc),
                                       updates[i].value});
  }

  state.fire(ctx.staged());
  state.advance_reserve_counter(ctx.next_reserve());
  result.stalls = ctx.stalls();
  result.notes = ctx.notes();
  return result;
}

}  // namespace gridsim
