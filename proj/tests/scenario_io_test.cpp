// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gridsim/scenario_io.hpp"

#include "support/scenario_gen.hpp"

using namespace gridsim;

namespace {

const char* minimal_text = R"(# minimal scenario
[user u1]
can_login = h1
can_use = pr1

[host h1]
resource pr1 key=cpu_speed capacity=2.0 unit=ghz type=direct

[broker b1]
property middleware=glite
hosts = h1
perf = 0.9

[job j1]
user = u1
require broker middleware=glite
process p1 needs cpu_speed>=1.0 unit=ghz

[config]
mode = meta
)";

}  // namespace

TEST_CASE("parse: minimal golden fixture") {
  Scenario s = parse_scenario_text(minimal_text);
  REQUIRE(s.jobs.size() == 1);
  REQUIRE(s.hosts.size() == 1);
  CHECK(s.jobs[0].id == "j1");
  CHECK(s.jobs[0].user == "u1");
  REQUIRE(s.jobs[0].processes.size() == 1);
  REQUIRE(s.jobs[0].processes[0].needs.size() == 1);
  CHECK(s.jobs[0].processes[0].needs[0] == capacity_attr("cpu_speed", 1.0, "ghz"));
  REQUIRE(s.jobs[0].broker_requirements.size() == 1);
  CHECK(s.jobs[0].broker_requirements[0] == keyword_attr("middleware", "glite"));
  CHECK(s.hosts[0].resources[0].attr == capacity_attr("cpu_speed", 2.0, "ghz"));
  CHECK(s.brokers[0].perf.value == 0.9);
  CHECK(s.config.mode == SimMode::meta);
  CHECK(s.config.stall_limit == 100);  // default
  CHECK(validate_scenario(s).empty());
}

TEST_CASE("parse: duplicate identifier names both lines") {
  std::string text = std::string("[host hx]\n") +
                     "resource r1 key=os keyword=linux type=direct\n" +
                     "[host hx]\n" +
                     "resource r2 key=os keyword=linux type=direct\n" +
                     "[job j1]\nuser = u1\nprocess p1 needs os=linux\n";
  try {
    parse_scenario_text(text);
    FAIL("expected ScenarioError");
  } catch (const ScenarioError& e) {
    std::string msg = e.what();
    CHECK(msg.find("hx") != std::string::npos);
    CHECK(msg.find("line 1") != std::string::npos);  // first declaration
    CHECK(e.line == 3);                               // second declaration
  }
}

TEST_CASE("parse: empty input has no jobs") {
  CHECK_THROWS_WITH_AS(parse_scenario_text(""), doctest::Contains("no jobs"), ScenarioError);
}

TEST_CASE("parse: unknown section and unknown key are strict errors") {
  CHECK_THROWS_WITH_AS(parse_scenario_text("[planet mars]\n"), doctest::Contains("unknown section"),
                       ScenarioError);
  CHECK_THROWS_WITH_AS(parse_scenario_text("[user u1]\nshoe_size = 46\n[job j]\nuser = u1\n"),
                       doctest::Contains("unknown key"), ScenarioError);
}

TEST_CASE("parse: syntax errors carry the line number") {
  try {
    parse_scenario_text("[user u1]\ncan_login = h1\n[host]\n");
    FAIL("expected ScenarioError");
  } catch (const ScenarioError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("parse: ids with dots or hashes are rejected") {
  CHECK_THROWS_AS(parse_scenario_text("[user u.1]\n[job j]\nuser = u.1\n"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario_text("[host h#1]\n[job j]\nuser = u\n"), ScenarioError);
}

TEST_CASE("validate: clause-level issues are all reported") {
  Scenario s = parse_scenario_text(minimal_text);
  s.jobs[0].processes[0].needs.clear();
  s.users[0].can_use.clear();
  auto issues = validate_scenario(s);
  auto has = [&](const char* code) {
    return std::any_of(issues.begin(), issues.end(),
                       [&](const ValidationIssue& i) { return i.code == code; });
  };
  CHECK(has("PROC_NO_REQUEST"));
  CHECK(has("USER_NO_RESOURCE"));
}

TEST_CASE("validate: undeclared policy and unknown references") {
  Scenario s = parse_scenario_text(minimal_text);
  s.jobs[0].policy = "nosuch";
  s.faults.push_back(FaultDecl{FaultKind::abort_task, "ghost", 3});
  auto issues = validate_scenario(s);
  auto has = [&](const char* code) {
    return std::any_of(issues.begin(), issues.end(),
                       [&](const ValidationIssue& i) { return i.code == code; });
  };
  CHECK(has("POLICY_UNDECLARED"));
  CHECK(has("FAULT_UNKNOWN_PROCESS"));
}

TEST_CASE("validate: manual host needs local mode and vice versa") {
  Scenario s = parse_scenario_text(minimal_text);
  s.jobs[0].manual_host = "h1";
  auto issues = validate_scenario(s);
  CHECK(std::any_of(issues.begin(), issues.end(), [](const ValidationIssue& i) {
    return i.code == "MANUAL_HOST_NOT_LOCAL";
  }));

  Scenario l = parse_scenario_text(minimal_text);
  l.config.mode = SimMode::local;
  issues = validate_scenario(l);
  CHECK(std::any_of(issues.begin(), issues.end(), [](const ValidationIssue& i) {
    return i.code == "LOCAL_MODE_NO_HOST";
  }));
}

TEST_CASE("round-trip: parse after serialize is the identity") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    testgen::GenOptions opt;
    opt.seed = seed;
    opt.matchmaking = seed % 2 ? Matchmaking::refined : Matchmaking::base;
    opt.with_abort_job = seed % 3 == 0;
    opt.dynamic_perf_brokers = seed % 4 == 0;
    Scenario s = testgen::random_scenario(opt);
    REQUIRE(validate_scenario(s).empty());
    std::string text = serialize_scenario(s);
    Scenario back = parse_scenario_text(text);
    if (!(back == s)) {
      MESSAGE("seed ", seed, " round-trip mismatch; serialized form:\n", text);
    }
    REQUIRE(back == s);
  }
}
