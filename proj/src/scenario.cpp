// SPDX-License-Identifier: Apache-2.0
#include "gridsim/scenario.hpp"

namespace gridsim {

const char* to_string(SimMode m) {
  switch (m) {
    case SimMode::local: return "local";
    case SimMode::broker: return "broker";
    case SimMode::meta: return "meta";
  }
  return "?";
}

const char* to_string(Matchmaking m) {
  return m == Matchmaking::refined ? "refined" : "base";
}

}  // namespace gridsim
