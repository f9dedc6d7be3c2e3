// SPDX-License-Identifier: Apache-2.0
#include "gridsim/state.hpp"

namespace gridsim {

void Signature::declare(const std::string& name, std::size_t arity, ValueKind codomain) {
  fns_[name] = FunctionDecl{arity, codomain};
}

const FunctionDecl* Signature::find(const std::string& name) const {
  auto it = fns_.find(name);
  return it == fns_.end() ? nullptr : &it->second;
}

const FunctionDecl& Signature::require(const Location& loc) const {
  const FunctionDecl* decl = find(loc.fn);
  if (!decl) throw SignatureError("undeclared function: " + loc.fn);
  if (decl->arity != loc.args.size()) {
    throw SignatureError("arity mismatch for " + loc.fn + ": declared " +
                         std::to_string(decl->arity) + ", got " + std::to_string(loc.args.size()));
  }
  return *decl;
}

void Signature::check_update(const Location& loc, const Value& value) const {
  const FunctionDecl& decl = require(loc);
  if (!matches_kind(value, decl.codomain)) {
    throw SignatureError("value " + gridsim::to_string(value) + " does not match codomain " +
                         std::string(gridsim::to_string(decl.codomain)) + " of " + loc.fn);
  }
}

void GridState::declare_universe(const std::string& name) {
  universes_.try_emplace(name);
  signature_.declare(name, 1, ValueKind::boolean);
}

void GridState::add_member(const std::string& universe, const std::string& elem) {
  auto it = universes_.find(universe);
  if (it == universes_.end()) throw SignatureError("undeclared universe: " + universe);
  it->second.insert(elem);
}

bool GridState::is_member(const std::string& universe, const std::string& elem) const {
  auto it = universes_.find(universe);
  if (it == universes_.end()) throw SignatureError("undeclared universe: " + universe);
  return it->second.count(elem) != 0;
}

bool GridState::any_universe_contains(const std::string& elem) const {
  for (const auto& [name, members] : universes_) {
    (void)name;
    if (members.count(elem)) return true;
  }
  return false;
}

const std::set<std::string>& GridState::members(const std::string& universe) const {
  auto it = universes_.find(universe);
  if (it == universes_.end()) throw SignatureError("undeclared universe: " + universe);
  return it->second;
}

Value GridState::read(const Location& loc) const {
  signature_.require(loc);
  if (auto uit = universes_.find(loc.fn); uit != universes_.end()) {
    return uit->second.count(loc.args.at(0)) != 0;
  }
  auto it = interp_.find(loc);
  return it == interp_.end() ? Value{Undef{}} : it->second;
}

void GridState::fire(const UpdateSet& set) {
  ConsistencyReport report = check_consistency(set);
  if (!report.ok()) {
    throw EngineFault("fire on inconsistent update set\n" + report.to_string(),
                      std::move(report), {});
  }
  for (const auto& u : set) {
    signature_.check_update(u.loc, u.value);
    if (auto uit = universes_.find(u.loc.fn); uit != universes_.end()) {
      const std::string& elem = u.loc.args.at(0);
      if (std::holds_alternative<bool>(u.value) && std::get<bool>(u.value)) {
        uit->second.insert(elem);
      } else {
        uit->second.erase(elem);
      }
      continue;
    }
    if (is_undef(u.value)) {
      interp_.erase(u.loc);
    } else {
      interp_[u.loc] = u.value;
    }
  }
}

std::string GridState::extend(const std::string& universe) {
  if (universes_.find(universe) == universes_.end()) {
    throw SignatureError("undeclared universe: " + universe);
  }
  std::string fresh = universe + "#" + std::to_string(reserve_counter_);
  while (any_universe_contains(fresh)) {
    ++reserve_counter_;
    fresh = universe + "#" + std::to_string(reserve_counter_);
  }
  ++reserve_counter_;
  universes_[universe].insert(fresh);
  return fresh;
}

void GridState::advance_reserve_counter(std::uint64_t value) {
  if (value > reserve_counter_) reserve_counter_ = value;
}

}  // namespace gridsim
