// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridsim/model.hpp"
#include "gridsim/state.hpp"

namespace gridsim {

inline bool is_true(const GridState& s, Location loc) {
  return s.read(loc) == Value{true};
}

/// Symbol content of a location, or nullopt when undef.
inline std::optional<std::string> sym(const GridState& s, Location loc) {
  Value v = s.read(loc);
  if (auto* p = std::get_if<std::string>(&v)) return *p;
  return std::nullopt;
}

inline std::optional<std::int64_t> int_of(const GridState& s, Location loc) {
  Value v = s.read(loc);
  if (auto* p = std::get_if<std::int64_t>(&v)) return *p;
  return std::nullopt;
}

/// Live processes of a job, ascending. Handler processes have no job and
/// never appear here.
std::vector<std::string> processes_of_job(const GridState& s, const std::string& job);

/// Resources p currently uses, ascending.
std::vector<std::string> used_resources(const GridState& s, const std::string& process);

/// Abstract resources with procRequest(p, ar) = true, ascending.
std::vector<std::string> requested_ars(const GridState& s, const std::string& process);

/// Live processes queued on pr (uses = true), FIFO order: by enqueue step,
/// then by identifier.
std::vector<std::string> fifo_waiters(const GridState& s, const std::string& pr);

}  // namespace gridsim
