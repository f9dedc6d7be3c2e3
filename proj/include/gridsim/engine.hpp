// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gridsim/choose.hpp"
#include "gridsim/state.hpp"

namespace gridsim {

/// One applied update with attribution and the pre-state value.
struct FiredUpdate {
  std::string agent;
  std::string rule;
  Location loc;
  Value old_value;
  Value new_value;
};

/// Side-channel note from a mapping agent whose guard was enabled but
/// whose candidate set was empty (or all-zero scored).
struct StallNote {
  std::string job;
  std::string layer;  // "broker" | "host" | "resource"
};

/// Free-form diagnostics (authorization stalls, refinement fallbacks).
struct AgentNote {
  std::string agent;
  std::string category;
  std::string detail;
};

struct StepResult {
  std::vector<FiredUpdate> fired;  // in staging order
  std::vector<StallNote> stalls;
  std::vector<AgentNote> notes;
  bool quiescent = false;  // nothing was staged
};

/// Handed to each agent program during a step. All reads go through the
/// unmodified pre-state snapshot; all writes are staged and fired together
/// after every agent has run.
class StepContext {
 public:
  StepContext(const GridState& snapshot, std::uint64_t step, ChoosePolicy policy)
      : state_(snapshot), step_(step), chooser_(policy, step),
        next_reserve_(snapshot.reserve_counter()) {}

  const GridState& state() const { return state_; }
  std::uint64_t step() const { return step_; }

  /// Sets the rule name attributed to subsequent stage() calls.
  void rule(std::string name) { rule_ = std::move(name); }

  /// Type-checked staging under the current agent/rule attribution.
  void stage(Location loc, Value value);

  /// Deterministic choose over an ascending candidate list.
  std::optional<std::string> choose(const std::vector<std::string>& candidates) {
    return chooser_.pick(candidates);
  }

  /// Imports a fresh element and stages its universe membership.
  std::string extend(const std::string& universe);

  void note_stall(std::string job, std::string layer) {
    stalls_.push_back(StallNote{std::move(job), std::move(layer)});
  }
  void note(std::string category, std::string detail);

  // Engine-side accessors.
  const UpdateSet& staged() const { return staged_; }
  const std::vector<StallNote>& stalls() const { return stalls_; }
  const std::vector<AgentNote>& notes() const { return notes_; }
  std::uint64_t next_reserve() const { return next_reserve_; }

 private:
  friend StepResult step(GridState&, const std::vector<struct Agent>&, const ChoosePolicy&,
                         std::uint64_t);

  const GridState& state_;
  std::uint64_t step_;
  Chooser chooser_;
  std::uint64_t next_reserve_;
  UpdateSet staged_;
  std::vector<StallNote> stalls_;
  std::vector<AgentNote> notes_;
  std::string agent_;
  std::string rule_;
  // (agent, rule) per staged update, parallel to staged_
  std::vector<std::pair<std::string, std::string>> attribution_;
};

/// A named single-agent program. Programs read the snapshot through the
/// context and stage updates; they must not hold state across steps.
struct Agent {
  std::string id;
  std::function<void(StepContext&)> program;
};

/// One distributed step: every agent's guards are evaluated against the
/// same pre-state snapshot, all contributions are collected into a single
/// update set, the set is consistency-checked, and fired once. Throws
/// EngineFault naming the contributing agents on conflict.
StepResult step(GridState& state, const std::vector<Agent>& agents, const ChoosePolicy& policy,
                std::uint64_t step_no);

}  // namespace gridsim
