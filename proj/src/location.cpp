// SPDX-License-Identifier: Apache-2.0
#include "gridsim/location.hpp"

#include <algorithm>
#include <map>

namespace gridsim {

std::string to_string(const Location& loc) {
  if (loc.args.empty()) return loc.fn;
  std::string out = loc.fn;
  out += '(';
  for (std::size_t i = 0; i < loc.args.size(); ++i) {
    if (i) out += ',';
    out += loc.args[i];
  }
  out += ')';
  return out;
}

std::string to_string(const Update& u) {
  return to_string(u.loc) + " := " + to_string(u.value);
}

std::string ConsistencyReport::to_string() const {
  if (ok()) return "consistent";
  std::string out = "inconsistent update set:";
  for (const auto& c : conflicts) {
    out += "\n  " + gridsim::to_string(c.loc) + " <- {";
    for (std::size_t i = 0; i < c.values.size(); ++i) {
      if (i) out += ", ";
      out += gridsim::to_string(c.values[i]);
    }
    out += "}";
  }
  return out;
}

ConsistencyReport check_consistency(const UpdateSet& set) {
  std::map<Location, std::vector<Value>> seen;
  for (const auto& u : set) {
    auto& vals = seen[u.loc];
    if (std::find(vals.begin(), vals.end(), u.value) == vals.end()) vals.push_back(u.value);
  }
  ConsistencyReport report;
  for (auto& [loc, vals] : seen) {
    if (vals.size() > 1) report.conflicts.push_back(Conflict{loc, std::move(vals)});
  }
  return report;
}

}  // namespace gridsim
