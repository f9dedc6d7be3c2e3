// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <variant>

namespace gridsim {

/// The distinguished undefined element. Every never-written location
/// reads as undef; undef is not the same thing as boolean false.
struct Undef {
  friend bool operator==(const Undef&, const Undef&) { return true; }
  friend bool operator<(const Undef&, const Undef&) { return false; }
};

/// A value a location can hold: undef, a boolean, an integer, a real,
/// or a symbol (element identifiers and state keywords are both symbols).
using Value = std::variant<Undef, bool, std::int64_t, double, std::string>;

inline bool is_undef(const Value& v) { return std::holds_alternative<Undef>(v); }

/// Codomain kinds for the signature's type checks.
enum class ValueKind { boolean, integer, real, symbol };

const char* to_string(ValueKind k);

/// Kind of a concrete value; undef has no kind (matches any codomain).
bool matches_kind(const Value& v, ValueKind k);

/// Deterministic text form: "undef", "true"/"false", integers, shortest
/// round-trip reals, symbols verbatim.
std::string to_string(const Value& v);

/// Shortest decimal representation that parses back to exactly d.
std::string format_real(double d);

}  // namespace gridsim
