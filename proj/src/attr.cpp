// SPDX-License-Identifier: Apache-2.0
#include "gridsim/attr.hpp"

#include "gridsim/value.hpp"

namespace gridsim {

Attr keyword_attr(std::string key, std::string value) {
  Attr a;
  a.kind = AttrKind::keyword;
  a.key = std::move(key);
  a.keyword = std::move(value);
  return a;
}

Attr capacity_attr(std::string key, double amount, std::string unit) {
  Attr a;
  a.kind = AttrKind::capacity;
  a.key = std::move(key);
  a.amount = amount;
  a.unit = std::move(unit);
  return a;
}

std::string to_string(const Attr& a) {
  if (a.kind == AttrKind::keyword) return a.key + "=" + a.keyword;
  return a.key + ">=" + format_real(a.amount) + " " + a.unit;
}

bool compatible_keyword(const Attr& required, const Attr& offered) {
  if (required.kind != AttrKind::keyword || offered.kind != AttrKind::keyword) {
    throw AttrTypeError("compatible_keyword requires keyword attrs");
  }
  return required.key == offered.key && required.keyword == offered.keyword;
}

bool compatible_capacity(const Attr& required, const Attr& offered) {
  if (required.kind != AttrKind::capacity || offered.kind != AttrKind::capacity) {
    throw AttrTypeError("compatible_capacity requires capacity attrs");
  }
  if (required.key != offered.key) {
    throw AttrTypeError("compatible_capacity key mismatch: " + required.key + " vs " +
                        offered.key);
  }
  if (required.unit != offered.unit) {
    throw AttrTypeError("compatible_capacity unit mismatch: " + required.unit + " vs " +
                        offered.unit);
  }
  return offered.amount >= required.amount;
}

bool compatible(const Attr& required, const Attr& offered) {
  if (required.kind != offered.kind) return false;
  if (required.kind == AttrKind::keyword) return compatible_keyword(required, offered);
  if (required.key != offered.key || required.unit != offered.unit) return false;
  return compatible_capacity(required, offered);
}

}  // namespace gridsim
