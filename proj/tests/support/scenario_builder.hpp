// SPDX-License-Identifier: Apache-2.0
//
// Hand-built scenarios for unit tests.
#pragma once

#include <string>
#include <vector>

#include "gridsim/scenario.hpp"

namespace gridsim::testgen {

/// 1 user, 1 broker, 1 host, 1 direct cpu resource, 1 single-process job.
inline Scenario minimal_scenario() {
  Scenario s;
  s.users.push_back(UserDecl{"u1", {"h1"}, {"pr1"}, {}});
  HostDecl h{"h1", {}};
  h.resources.push_back(PhysicalResourceDecl{"pr1", capacity_attr("cpu_speed", 2.0, "ghz"),
                                             ResourceType::direct});
  s.hosts.push_back(h);
  BrokerDecl b{"b1", {keyword_attr("middleware", "glite")}, {"h1"}, BrokerPerf{false, 0.9}};
  s.brokers.push_back(b);
  JobDecl j;
  j.id = "j1";
  j.user = "u1";
  j.processes.push_back(ProcessDecl{"p1", {capacity_attr("cpu_speed", 1.0, "ghz")}});
  s.jobs.push_back(j);
  s.config.mode = SimMode::meta;
  s.config.matchmaking = Matchmaking::base;
  return s;
}

inline HostDecl host(std::string id, std::vector<PhysicalResourceDecl> resources) {
  return HostDecl{std::move(id), std::move(resources)};
}

inline PhysicalResourceDecl direct_cap(std::string id, std::string key, double amount,
                                       std::string unit) {
  return PhysicalResourceDecl{std::move(id), capacity_attr(std::move(key), amount, std::move(unit)),
                              ResourceType::direct};
}

inline PhysicalResourceDecl direct_kw(std::string id, std::string key, std::string value) {
  return PhysicalResourceDecl{std::move(id), keyword_attr(std::move(key), std::move(value)),
                              ResourceType::direct};
}

inline PhysicalResourceDecl handled_cap(std::string id, std::string key, double amount,
                                        std::string unit) {
  return PhysicalResourceDecl{std::move(id), capacity_attr(std::move(key), amount, std::move(unit)),
                              ResourceType::handled};
}

}  // namespace gridsim::testgen
