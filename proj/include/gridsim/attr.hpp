// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace gridsim {

struct AttrTypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class AttrKind { keyword, capacity };

/// A requirement or capability attribute: either a keyword (exact string
/// match) or a capacity amount with a unit (offered >= required).
struct Attr {
  AttrKind kind = AttrKind::keyword;
  std::string key;      // e.g. os, arch, memory, cpu_speed
  std::string keyword;  // keyword kind only
  double amount = 0.0;  // capacity kind only, >= 0
  std::string unit;     // capacity kind only

  friend bool operator==(const Attr&, const Attr&) = default;
};

Attr keyword_attr(std::string key, std::string value);
Attr capacity_attr(std::string key, double amount, std::string unit);

std::string to_string(const Attr& a);

/// Exact, case-sensitive key and value match. Both attrs must be keywords.
bool compatible_keyword(const Attr& required, const Attr& offered);

/// offered.amount >= required.amount. Both attrs must be capacities with
/// the same key and unit.
bool compatible_capacity(const Attr& required, const Attr& offered);

/// Total dispatcher: keyword/keyword -> exact match, capacity/capacity with
/// matching key and unit -> amount comparison, anything else -> false.
bool compatible(const Attr& required, const Attr& offered);

}  // namespace gridsim
