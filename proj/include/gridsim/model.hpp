// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gridsim/scenario.hpp"
#include "gridsim/state.hpp"

namespace gridsim {

/// Scenario violates an initial-state clause.
struct InitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace uni {
inline constexpr const char* user = "USER";
inline constexpr const char* job = "JOB";
inline constexpr const char* process = "PROCESS";
inline constexpr const char* task = "TASK";
inline constexpr const char* host = "HOST";
inline constexpr const char* presource = "PRESOURCE";
inline constexpr const char* aresource = "ARESOURCE";
inline constexpr const char* location = "LOCATION";
inline constexpr const char* attr = "ATTR";
inline constexpr const char* broker = "BROKER";
inline constexpr const char* requirement = "REQUIREMENT";
inline constexpr const char* property = "PROPERTY";
inline constexpr const char* metabroker = "METABROKER";
}  // namespace uni

namespace fn {
inline constexpr const char* job_of = "job";
inline constexpr const char* user_of = "user";
inline constexpr const char* globaluser = "globaluser";
inline constexpr const char* localuser = "localuser";
inline constexpr const char* submitted = "submitted";
inline constexpr const char* request = "request";
inline constexpr const char* proc_request = "procRequest";
inline constexpr const char* uses = "uses";
inline constexpr const char* mapped = "mapped";
inline constexpr const char* belongs_to = "belongsTo";
inline constexpr const char* installed = "installed";
inline constexpr const char* attr_of = "attr";
inline constexpr const char* location_of = "location";
inline constexpr const char* handler = "handler";
inline constexpr const char* type_of = "type";
inline constexpr const char* can_login = "canLogin";
inline constexpr const char* can_use = "canUse";
inline constexpr const char* job_state = "jobState";
inline constexpr const char* proc_state = "procState";
inline constexpr const char* event = "event";
inline constexpr const char* task_of = "task";
inline constexpr const char* mapped_host = "mappedHost";
inline constexpr const char* mapped_resource = "mappedResource";
inline constexpr const char* mapped_broker = "mappedBroker";
inline constexpr const char* manages = "manages";
inline constexpr const char* have = "have";
inline constexpr const char* occupant = "occupant";
inline constexpr const char* enqueued_at = "enqueuedAt";
}  // namespace fn

// jobState / procState / event / type keywords
namespace kw {
inline constexpr const char* submitted = "submitted";
inline constexpr const char* waiting = "waiting";
inline constexpr const char* running = "running";
inline constexpr const char* done = "done";
inline constexpr const char* failed = "failed";
inline constexpr const char* start = "start";
inline constexpr const char* abort = "abort";
inline constexpr const char* terminate = "terminate";
inline constexpr const char* direct = "direct";
inline constexpr const char* handled = "handled";
}  // namespace kw

// Derived identifiers. User-declared ids cannot contain '.', so these
// never collide with scenario entities.
std::string task_id(const std::string& process);
std::string location_id(const std::string& host);
std::string ar_id(const std::string& process, std::size_t k);
std::string req_id(const std::string& job, std::size_t k);
std::string policy_req_id(const std::string& job);
std::string prop_id(const std::string& broker, std::size_t k);
std::string attr_atom_id(const std::string& owner);

enum class RequirementRole { broker_property, abstract_resource, policy };

struct RequirementRef {
  std::string id;
  RequirementRole role;
  Attr attr;
};

/// Static lookup tables derived from a scenario: attr records per element,
/// per-job requirement lists, container relations, sorted id lists. Rules
/// read dynamic functions from the state and static records from here.
struct EntityIndex {
  const Scenario* scenario = nullptr;

  std::map<std::string, const UserDecl*> users;
  std::map<std::string, const JobDecl*> jobs;
  std::map<std::string, const HostDecl*> hosts;
  std::map<std::string, const BrokerDecl*> brokers;
  std::map<std::string, const RankPolicyDecl*> policies;

  std::map<std::string, std::string> job_of_process;       // process -> job
  std::map<std::string, const ProcessDecl*> processes;
  std::map<std::string, std::string> host_of_resource;     // pr -> host
  std::map<std::string, const PhysicalResourceDecl*> resources;

  std::map<std::string, Attr> attr_record;                 // element id -> attr
  std::map<std::string, std::vector<RequirementRef>> job_requirements;
  std::map<std::string, std::vector<std::string>> process_ars;   // process -> AR ids
  std::map<std::string, std::vector<std::string>> host_prs;      // host -> pr ids
  std::map<std::string, std::vector<std::string>> broker_props;  // broker -> property ids

  std::vector<std::string> user_ids, job_ids, process_ids, host_ids, broker_ids;

  /// Abstract-resource requests of every process of the job, in declaration order.
  std::vector<RequirementRef> job_resource_requests(const std::string& job) const;
};

EntityIndex build_index(const Scenario& scenario);

/// Builds the initial state: all entities loaded into their universes,
/// static relations materialized, dynamic functions at their initial
/// interpretation (undef or false). Local mode presets the manually
/// chosen host and its submission. Throws InitError, naming the violated
/// clause, on scenarios that break an initial-state condition.
GridState init_state(const Scenario& scenario);

}  // namespace gridsim
