// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "gridsim/location.hpp"
#include "gridsim/value.hpp"

namespace gridsim {

/// Undeclared function, wrong arity, or a value outside the codomain.
struct SignatureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Firing an inconsistent update set aborts the simulation.
struct EngineFault : std::runtime_error {
  EngineFault(std::string what, ConsistencyReport r, std::vector<std::string> agents_involved)
      : std::runtime_error(std::move(what)),
        report(std::move(r)),
        agents(std::move(agents_involved)) {}

  ConsistencyReport report;
  std::vector<std::string> agents;  // agents that contributed conflicting updates
};

struct FunctionDecl {
  std::size_t arity = 0;
  ValueKind codomain = ValueKind::symbol;
};

/// Declared function names with arities and codomains. Universe-membership
/// predicates are declared as unary boolean functions.
class Signature {
 public:
  void declare(const std::string& name, std::size_t arity, ValueKind codomain);
  const FunctionDecl* find(const std::string& name) const;
  bool contains(const std::string& name) const { return fns_.count(name) != 0; }

  /// Throws SignatureError unless loc's function is declared with loc's arity.
  const FunctionDecl& require(const Location& loc) const;

  /// require() plus a codomain check on the value. Used at staging time.
  void check_update(const Location& loc, const Value& value) const;

 private:
  std::map<std::string, FunctionDecl> fns_;
};

/// The ASM state: a signature, a finite interpretation (absent => undef),
/// universe membership sets, and the reserve counter for fresh elements.
///
/// Universe membership is routed through the universes map: reading a
/// unary location named after a universe yields the membership boolean,
/// and firing one inserts or removes the element.
class GridState {
 public:
  Signature& signature() { return signature_; }
  const Signature& signature() const { return signature_; }

  /// Registers the universe and its unary boolean predicate.
  void declare_universe(const std::string& name);
  bool is_universe(const std::string& name) const { return universes_.count(name) != 0; }

  void add_member(const std::string& universe, const std::string& elem);
  bool is_member(const std::string& universe, const std::string& elem) const;
  bool any_universe_contains(const std::string& elem) const;
  const std::set<std::string>& members(const std::string& universe) const;
  const std::map<std::string, std::set<std::string>>& universes() const { return universes_; }

  /// Interpreted value of loc, or undef if never written.
  Value read(const Location& loc) const;

  /// Applies a checked-consistent update set atomically. Throws EngineFault
  /// (with the conflict report) if the set is inconsistent. Writing undef
  /// erases the entry; writing false to a universe predicate removes the
  /// element from the universe.
  void fire(const UpdateSet& set);

  /// Imports a fresh element "<universe>#<counter>" from the reserve,
  /// adds it to the universe, and bumps the counter.
  std::string extend(const std::string& universe);

  std::uint64_t reserve_counter() const { return reserve_counter_; }

  /// Monotone by contract; used by the engine after in-step extends.
  void advance_reserve_counter(std::uint64_t value);

  const std::map<Location, Value>& interpretation() const { return interp_; }

  /// ASM-state equality: same interpretation and same universe membership.
  /// The reserve counter is bookkeeping and does not participate.
  friend bool operator==(const GridState& a, const GridState& b) {
    return a.interp_ == b.interp_ && a.universes_ == b.universes_;
  }

 private:
  Signature signature_;
  std::map<Location, Value> interp_;
  std::map<std::string, std::set<std::string>> universes_;
  std::uint64_t reserve_counter_ = 0;
};

}  // namespace gridsim
