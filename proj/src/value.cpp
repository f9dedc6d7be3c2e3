// SPDX-License-Identifier: Apache-2.0
#include "gridsim/value.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace gridsim {

const char* to_string(ValueKind k) {
  switch (k) {
    case ValueKind::boolean: return "boolean";
    case ValueKind::integer: return "integer";
    case ValueKind::real: return "real";
    case ValueKind::symbol: return "symbol";
  }
  return "?";
}

bool matches_kind(const Value& v, ValueKind k) {
  if (is_undef(v)) return true;
  switch (k) {
    case ValueKind::boolean: return std::holds_alternative<bool>(v);
    case ValueKind::integer: return std::holds_alternative<std::int64_t>(v);
    case ValueKind::real: return std::holds_alternative<double>(v);
    case ValueKind::symbol: return std::holds_alternative<std::string>(v);
  }
  return false;
}

std::string format_real(double d) {
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, d);
    if (std::strtod(buf, nullptr) == d) break;
  }
  return buf;
}

std::string to_string(const Value& v) {
  struct Visitor {
    std::string operator()(Undef) const { return "undef"; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const { return format_real(d); }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

}  // namespace gridsim
