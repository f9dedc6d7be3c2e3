// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "gridsim/engine.hpp"
#include "gridsim/model.hpp"

namespace gridsim::brokering {

inline constexpr const char* host_selection_rule = "host_selection";
inline constexpr const char* host_mapping_rule = "host_mapping";
inline constexpr const char* broker_selection_rule = "broker_selection";
inline constexpr const char* broker_mapping_rule = "broker_mapping";

/// Subjects with their matchmaking scores; a zero score marks an
/// incompatible subject.
struct ScoreVector {
  std::vector<std::string> subjects;  // ascending ids
  std::vector<double> scores;
};

/// Host selection: submits the job to its mapped host once every requested
/// abstract resource has a usable compatible counterpart there.
void host_selection(StepContext& ctx, const EntityIndex& ix, const std::string& job);

/// Base host-mapping agent: chooses a host covering every abstract
/// resource request of the job.
void host_mapping(StepContext& ctx, const EntityIndex& ix, const std::string& job);

/// Broker selection: submits the job to its mapped broker provided the broker
/// manages a host with resources the job's user can use.
void broker_selection(StepContext& ctx, const EntityIndex& ix, const std::string& job);

/// Base broker-mapping agent: chooses a broker holding a compatible
/// property for every broker-property requirement of the job.
void broker_mapping(StepContext& ctx, const EntityIndex& ix, const std::string& job);

/// Broker performance score. Static mode returns the configured constant;
/// dynamic mode returns done/(done+failed) over jobs submitted to the
/// broker, 1.0 while no submitted job has finished.
double broker_perf(const GridState& s, const EntityIndex& ix, const std::string& broker);

/// Weighted capacity sum over the host's physical resources; keyword
/// attributes and unweighted keys contribute nothing.
double count_rank(const EntityIndex& ix, const RankPolicyDecl& policy, const std::string& host);

/// Scored broker mapping: perf per broker, incompatible brokers zeroed,
/// argmax with ties resolved by the choose policy. An all-zero vector is
/// an empty candidate set (stall).
void refined_broker_mapping(StepContext& ctx, const EntityIndex& ix, const std::string& job);

/// Scored host mapping driven by the job's rank policy; hosts missing a
/// compatible resource for any request are zeroed. Jobs without a policy
/// requirement fall back to the base mapping.
void refined_host_mapping(StepContext& ctx, const EntityIndex& ix, const std::string& job);

// Score vectors as the refined matchmakers compute them (zeroing applied).
ScoreVector broker_scores(const GridState& s, const EntityIndex& ix, const std::string& job);
ScoreVector host_scores(const GridState& s, const EntityIndex& ix, const std::string& job,
                        const RankPolicyDecl& policy);

}  // namespace gridsim::brokering
