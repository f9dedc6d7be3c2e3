// SPDX-License-Identifier: Apache-2.0
//
// Randomized checks for the execution-kernel contracts. Each function runs
// `cases` generated cases and returns violation messages (empty = pass).
// Shared by the unit suite (small case counts) and the acceptance suite.
#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gridsim/engine.hpp"
#include "gridsim/state.hpp"

namespace gridsim::testgen {

using Rng = std::mt19937_64;

inline std::string pick(Rng& rng, const std::vector<std::string>& pool) {
  return pool[rng() % pool.size()];
}

struct KernelWorld {
  GridState state;
  std::vector<std::string> elems;
  std::vector<std::string> bool_fns;
  std::vector<std::string> sym_fns;
};

/// A small random state: two universes with a handful of members, boolean
/// and symbol functions of arity 1-2, and a random pre-interpretation.
inline KernelWorld random_world(Rng& rng) {
  KernelWorld w;
  w.state.declare_universe("U0");
  w.state.declare_universe("U1");
  std::size_t n = 3 + rng() % 5;
  for (std::size_t i = 0; i < n; ++i) {
    std::string e = "e" + std::to_string(i);
    w.elems.push_back(e);
    w.state.add_member(rng() % 2 ? "U0" : "U1", e);
  }
  for (int i = 0; i < 3; ++i) {
    std::string f = "flag" + std::to_string(i);
    w.state.signature().declare(f, 1 + rng() % 2, ValueKind::boolean);
    w.bool_fns.push_back(f);
  }
  for (int i = 0; i < 3; ++i) {
    std::string f = "ptr" + std::to_string(i);
    w.state.signature().declare(f, 1 + rng() % 2, ValueKind::symbol);
    w.sym_fns.push_back(f);
  }

  UpdateSet init;
  std::size_t writes = rng() % 10;
  std::set<Location> used;
  for (std::size_t i = 0; i < writes; ++i) {
    bool is_bool = rng() % 2;
    std::string f = is_bool ? pick(rng, w.bool_fns) : pick(rng, w.sym_fns);
    std::size_t arity = w.state.signature().find(f)->arity;
    Location loc{f, {}};
    for (std::size_t a = 0; a < arity; ++a) loc.args.push_back(pick(rng, w.elems));
    if (!used.insert(loc).second) continue;
    Value v = is_bool ? Value{static_cast<bool>(rng() % 2)} : Value{pick(rng, w.elems)};
    init.stage(loc, v);
  }
  w.state.fire(init);
  return w;
}

inline Location random_location(Rng& rng, const KernelWorld& w) {
  bool is_bool = rng() % 2;
  std::string f = is_bool ? pick(rng, w.bool_fns) : pick(rng, w.sym_fns);
  std::size_t arity = w.state.signature().find(f)->arity;
  Location loc{f, {}};
  for (std::size_t a = 0; a < arity; ++a) loc.args.push_back(pick(rng, w.elems));
  return loc;
}

inline Value random_value_for(Rng& rng, const KernelWorld& w, const Location& loc) {
  if (w.state.signature().find(loc.fn)->codomain == ValueKind::boolean) {
    return static_cast<bool>(rng() % 2);
  }
  if (rng() % 5 == 0) return Undef{};
  return pick(rng, w.elems);
}

/// Frame property: firing a consistent update set changes exactly the
/// written locations.
inline std::vector<std::string> frame_property(std::size_t cases, std::uint64_t seed) {
  std::vector<std::string> bad;
  Rng rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    KernelWorld w = random_world(rng);

    std::map<Location, Value> writes;
    std::size_t k = 1 + rng() % 5;
    for (std::size_t i = 0; i < k; ++i) {
      Location loc = random_location(rng, w);
      writes.emplace(loc, random_value_for(rng, w, loc));
    }
    UpdateSet set;
    for (const auto& [loc, v] : writes) {
      set.stage(loc, v);
      if (rng() % 3 == 0) set.stage(loc, v);  // equal duplicates stay consistent
    }

    GridState before = w.state;
    GridState after = w.state;
    after.fire(set);

    for (const auto& [loc, v] : writes) {
      if (!(after.read(loc) == v) && !before.is_universe(loc.fn)) {
        bad.push_back("case " + std::to_string(c) + ": written location " + to_string(loc) +
                      " does not hold its value");
      }
    }
    for (const auto& [loc, v] : before.interpretation()) {
      if (writes.count(loc)) continue;
      if (!(after.read(loc) == v)) {
        bad.push_back("case " + std::to_string(c) + ": untouched location " + to_string(loc) +
                      " changed");
      }
    }
    for (int probe = 0; probe < 5; ++probe) {
      Location loc = random_location(rng, w);
      if (writes.count(loc)) continue;
      if (!(after.read(loc) == before.read(loc))) {
        bad.push_back("case " + std::to_string(c) + ": probe location " + to_string(loc) +
                      " changed");
      }
    }
  }
  return bad;
}

/// Synthetic guarded agents: every rule whose guard holds in the pre-state
/// must contribute its update, regardless of co-fired updates; a step from
/// a deep copy produces an identical successor.
inline std::vector<std::string> snapshot_property(std::size_t cases, std::uint64_t seed) {
  std::vector<std::string> bad;
  Rng rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    KernelWorld w = random_world(rng);

    struct Spec {
      Location guard_loc;
      Value guard_val;
      Location write_loc;
      Value write_val;
    };
    std::vector<Spec> specs;
    std::vector<Agent> agents;
    std::size_t n = 1 + rng() % 4;
    for (std::size_t i = 0; i < n; ++i) {
      Spec sp;
      sp.guard_loc = random_location(rng, w);
      sp.guard_val = rng() % 2 ? w.state.read(sp.guard_loc) : random_value_for(rng, w, sp.guard_loc);
      // Disjoint write targets per agent keep the combined set consistent.
      std::string f = "agent_out" + std::to_string(i);
      w.state.signature().declare(f, 1, ValueKind::symbol);
      sp.write_loc = Location{f, {pick(rng, w.elems)}};
      sp.write_val = pick(rng, w.elems);
      specs.push_back(sp);
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Spec& sp = specs[i];
      agents.push_back(Agent{"a" + std::to_string(i), [sp](StepContext& ctx) {
        ctx.rule("guarded");
        if (ctx.state().read(sp.guard_loc) == sp.guard_val) {
          ctx.stage(sp.write_loc, sp.write_val);
        }
      }});
    }
    // One extra agent rewrites every guard location, trying to disable the
    // others mid-step; under snapshot semantics it cannot. Its updates are
    // fixed up front so the program is deterministic across reruns.
    std::vector<Update> mutations;
    {
      std::set<Location> seen;
      for (const Spec& sp : specs) {
        if (seen.insert(sp.guard_loc).second) {
          mutations.push_back(Update{sp.guard_loc, random_value_for(rng, w, sp.guard_loc)});
        }
      }
    }
    agents.push_back(Agent{"mutator", [mutations](StepContext& ctx) {
      ctx.rule("mutate");
      for (const Update& u : mutations) ctx.stage(u.loc, u.value);
    }});

    GridState pre = w.state;
    GridState copy = w.state;
    StepResult r1;
    StepResult r2;
    try {
      r1 = step(w.state, agents, ChoosePolicy{}, 0);
      r2 = step(copy, agents, ChoosePolicy{}, 0);
    } catch (const EngineFault&) {
      continue;  // mutator may conflict with itself across agents; not this property
    }

    if (!(w.state == copy)) {
      bad.push_back("case " + std::to_string(c) + ": step from deep copy differs");
    }
    for (const Spec& sp : specs) {
      bool enabled = pre.read(sp.guard_loc) == sp.guard_val;
      bool fired = !(w.state.read(sp.write_loc) == Value{Undef{}}) &&
                   w.state.read(sp.write_loc) == sp.write_val;
      bool was_set = pre.read(sp.write_loc) == sp.write_val;
      if (enabled && !fired) {
        bad.push_back("case " + std::to_string(c) + ": enabled rule did not fire");
      }
      if (!enabled && fired && !was_set) {
        bad.push_back("case " + std::to_string(c) + ": disabled rule fired");
      }
    }
  }
  return bad;
}

/// check_consistency against a brute-force pairwise oracle.
inline std::vector<std::string> conflict_completeness(std::size_t cases, std::uint64_t seed) {
  std::vector<std::string> bad;
  Rng rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    KernelWorld w = random_world(rng);
    UpdateSet set;
    std::size_t k = rng() % 8;
    std::vector<Update> updates;
    for (std::size_t i = 0; i < k; ++i) {
      Location loc = random_location(rng, w);
      Value v = random_value_for(rng, w, loc);
      set.stage(loc, v);
      updates.push_back(Update{loc, v});
    }

    std::set<Location> expected;
    for (std::size_t i = 0; i < updates.size(); ++i) {
      for (std::size_t j = i + 1; j < updates.size(); ++j) {
        if (updates[i].loc == updates[j].loc && !(updates[i].value == updates[j].value)) {
          expected.insert(updates[i].loc);
        }
      }
    }

    ConsistencyReport report = check_consistency(set);
    std::set<Location> got;
    for (const auto& conflict : report.conflicts) got.insert(conflict.loc);
    if (got != expected) {
      bad.push_back("case " + std::to_string(c) + ": conflict set mismatch (" +
                    std::to_string(got.size()) + " reported, " + std::to_string(expected.size()) +
                    " expected)");
    }
    if (report.ok() != expected.empty()) {
      bad.push_back("case " + std::to_string(c) + ": ok flag wrong");
    }
  }
  return bad;
}

/// extend always yields an identifier no universe contains, even when
/// members were planted to collide with the naming scheme.
inline std::vector<std::string> extend_freshness(std::size_t cases, std::uint64_t seed) {
  std::vector<std::string> bad;
  Rng rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    KernelWorld w = random_world(rng);
    // Adversarial members shaped like reserve identifiers.
    for (int i = 0; i < 3; ++i) {
      if (rng() % 2) {
        w.state.add_member(rng() % 2 ? "U0" : "U1",
                           std::string(rng() % 2 ? "U0#" : "U1#") + std::to_string(rng() % 6));
      }
    }
    std::size_t n = 1 + rng() % 6;
    for (std::size_t i = 0; i < n; ++i) {
      std::string universe = rng() % 2 ? "U0" : "U1";
      GridState before = w.state;
      std::string fresh = w.state.extend(universe);
      if (before.any_universe_contains(fresh)) {
        bad.push_back("case " + std::to_string(c) + ": extend returned existing id " + fresh);
      }
      if (!w.state.is_member(universe, fresh)) {
        bad.push_back("case " + std::to_string(c) + ": fresh element not a member");
      }
    }
  }
  return bad;
}

}  // namespace gridsim::testgen
