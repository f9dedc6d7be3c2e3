// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gridsim/attr.hpp"
#include "gridsim/choose.hpp"

namespace gridsim {

enum class SimMode { local, broker, meta };
enum class Matchmaking { base, refined };
enum class ResourceType { direct, handled };
enum class FaultKind { abort_task, terminate_task };

const char* to_string(SimMode m);
const char* to_string(Matchmaking m);

struct UserDecl {
  std::string id;
  std::vector<std::string> can_login;            // host ids
  std::vector<std::string> can_use;              // physical resource ids
  std::map<std::string, std::string> local_ids;  // host id -> local account name

  friend bool operator==(const UserDecl&, const UserDecl&) = default;
};

struct PhysicalResourceDecl {
  std::string id;
  Attr attr;
  ResourceType type = ResourceType::direct;

  friend bool operator==(const PhysicalResourceDecl&, const PhysicalResourceDecl&) = default;
};

struct HostDecl {
  std::string id;
  std::vector<PhysicalResourceDecl> resources;

  friend bool operator==(const HostDecl&, const HostDecl&) = default;
};

struct BrokerPerf {
  bool dynamic = false;
  double value = 1.0;  // static mode only

  friend bool operator==(const BrokerPerf&, const BrokerPerf&) = default;
};

struct BrokerDecl {
  std::string id;
  std::vector<Attr> properties;
  std::vector<std::string> hosts;
  BrokerPerf perf;

  friend bool operator==(const BrokerDecl&, const BrokerDecl&) = default;
};

struct ProcessDecl {
  std::string id;
  std::vector<Attr> needs;  // each entry becomes one abstract resource

  friend bool operator==(const ProcessDecl&, const ProcessDecl&) = default;
};

struct JobDecl {
  std::string id;
  std::string user;
  std::vector<Attr> broker_requirements;
  std::optional<std::string> policy;       // rank policy name
  std::vector<ProcessDecl> processes;
  std::optional<std::string> manual_host;  // local mode: user-chosen host

  friend bool operator==(const JobDecl&, const JobDecl&) = default;
};

struct RankPolicyDecl {
  std::string name;
  std::map<std::string, double> weights;  // attr key -> weight, >= 0

  friend bool operator==(const RankPolicyDecl&, const RankPolicyDecl&) = default;
};

struct FaultDecl {
  FaultKind kind = FaultKind::terminate_task;
  std::string process;
  std::uint64_t at = 0;

  friend bool operator==(const FaultDecl&, const FaultDecl&) = default;
};

struct SimConfig {
  ChoosePolicy choose;
  SimMode mode = SimMode::meta;
  Matchmaking matchmaking = Matchmaking::base;
  std::uint64_t stall_limit = 100;
  std::uint64_t max_steps = 500;

  friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

/// Declarative input for one run: universes, authorization, requirements,
/// matchmaking configuration, and fault injections.
struct Scenario {
  std::vector<UserDecl> users;
  std::vector<BrokerDecl> brokers;
  std::vector<HostDecl> hosts;
  std::vector<JobDecl> jobs;
  std::vector<RankPolicyDecl> policies;
  std::vector<FaultDecl> faults;
  SimConfig config;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

}  // namespace gridsim
