// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gridsim/scenario.hpp"

namespace gridsim {

/// Syntax error, duplicate identifier, or unknown section/key.
struct ScenarioError : std::runtime_error {
  ScenarioError(std::string msg, std::size_t line_no, std::size_t col_no)
      : std::runtime_error("line " + std::to_string(line_no) + ":" + std::to_string(col_no) +
                           ": " + msg),
        line(line_no),
        col(col_no) {}

  std::size_t line;
  std::size_t col;
};

/// One violated validation clause; code is machine-readable.
struct ValidationIssue {
  std::string code;
  std::string message;
};

/// Strict parse of the section-based scenario format. Unknown sections or
/// keys are errors; duplicate identifiers report both declaration lines.
Scenario parse_scenario(std::istream& in);
Scenario parse_scenario_text(const std::string& text);

/// Total: always returns the complete list of violations (empty = ok).
std::vector<ValidationIssue> validate_scenario(const Scenario& s);

/// Canonical text form; parse_scenario_text(serialize_scenario(s)) == s.
std::string serialize_scenario(const Scenario& s);

}  // namespace gridsim
