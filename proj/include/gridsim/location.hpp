// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <string>
#include <vector>

#include "gridsim/value.hpp"

namespace gridsim {

/// A location is the addressable unit of state: a function name applied
/// to a tuple of element identifiers. Nullary locations have no args.
struct Location {
  std::string fn;
  std::vector<std::string> args;

  friend auto operator<=>(const Location&, const Location&) = default;
};

/// Renders as fn or fn(a,b).
std::string to_string(const Location& loc);

/// One staged write.
struct Update {
  Location loc;
  Value value;

  friend bool operator==(const Update&, const Update&) = default;
};

std::string to_string(const Update& u);

/// The writes collected from all enabled rules in one step. Staging does
/// not deduplicate; consistency is a separate check.
class UpdateSet {
 public:
  void stage(Location loc, Value value) {
    updates_.push_back(Update{std::move(loc), std::move(value)});
  }

  bool empty() const { return updates_.empty(); }
  std::size_t size() const { return updates_.size(); }
  const std::vector<Update>& updates() const { return updates_; }

  auto begin() const { return updates_.begin(); }
  auto end() const { return updates_.end(); }

 private:
  std::vector<Update> updates_;
};

/// A location proposed with two or more distinct values.
struct Conflict {
  Location loc;
  std::vector<Value> values;  // distinct proposed values, in first-seen order
};

struct ConsistencyReport {
  std::vector<Conflict> conflicts;

  bool ok() const { return conflicts.empty(); }
  std::string to_string() const;
};

/// ok iff no location appears with two distinct values. Equal-value
/// duplicates are consistent. The report lists every conflicting location
/// with all proposed values.
ConsistencyReport check_consistency(const UpdateSet& set);

}  // namespace gridsim
