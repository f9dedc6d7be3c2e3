// SPDX-License-Identifier: Apache-2.0
#include "gridsim/brokering.hpp"

#include <algorithm>

#include "gridsim/attr.hpp"
#include "gridsim/read.hpp"

namespace gridsim::brokering {

namespace {

const Attr& attr_of(const EntityIndex& ix, const std::string& elem) {
  return ix.attr_record.at(elem);
}

/// Every abstract-resource request of the job has a compatible physical
/// resource on h.
bool host_covers(const GridState& s, const EntityIndex& ix, const std::string& job,
                 const std::string& h) {
  for (const std::string& ar : s.members(uni::aresource)) {
    if (!is_true(s, {fn::request, {job, ar}})) continue;
    bool covered = false;
    for (const std::string& pr : s.members(uni::presource)) {
      if (is_true(s, {fn::belongs_to, {pr, h}}) &&
          compatible(attr_of(ix, ar), attr_of(ix, pr))) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

/// Broker-property requirements of the job (policy and abstract-resource
/// requirements are matched elsewhere).
std::vector<std::string> broker_property_requests(const GridState& s, const EntityIndex& ix,
                                                  const std::string& job) {
  std::vector<std::string> out;
  auto it = ix.job_requirements.find(job);
  if (it == ix.job_requirements.end()) return out;
  for (const auto& ref : it->second) {
    if (ref.role == RequirementRole::broker_property &&
        is_true(s, {fn::request, {job, ref.id}})) {
      out.push_back(ref.id);
    }
  }
  return out;
}

/// Every broker-property requirement has a compatible property of b.
bool broker_covers(const GridState& s, const EntityIndex& ix, const std::string& job,
                   const std::string& b) {
  for (const std::string& r : broker_property_requests(s, ix, job)) {
    bool covered = false;
    for (const std::string& p : s.members(uni::property)) {
      if (is_true(s, {fn::have, {b, p}}) && compatible(attr_of(ix, r), attr_of(ix, p))) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

/// Argmax with ties resolved by the choose policy; nullopt when all
/// scores are zero.
std::optional<std::string> pick_max(StepContext& ctx, const ScoreVector& sv) {
  double best = 0.0;
  for (double v : sv.scores) best = std::max(best, v);
  if (best <= 0.0) return std::nullopt;
  std::vector<std::string> tied;
  for (std::size_t i = 0; i < sv.subjects.size(); ++i) {
    if (sv.scores[i] == best) tied.push_back(sv.subjects[i]);
  }
  return ctx.choose(tied);
}

}  // namespace

void host_selection(StepContext& ctx, const EntityIndex& ix, const std::string& job) {
  const GridState& s = ctx.state();
  auto h = sym(s, {fn::mapped_host, {job}});
  if (!h) return;
  if (is_true(s, {fn::submitted, {job, *h}})) return;
  auto user = sym(s, {fn::user_of, {job}});
  if (!user) return;
  ctx.rule(host_selection_rule);

  for (const std::string& ar : s.members(uni::aresource)) {
    if (!is_true(s, {fn::request, {job, ar}})) continue;
    bool counterpart = false;
    for (const std::string& pr : s.members(uni::presource)) {
      if (is_true(s, {fn::belongs_to, {pr, *h}}) &&
          compatible(attr_of(ix, ar), attr_of(ix, pr)) &&
          is_true(s, {fn::can_use, {*user, pr}})) {
        counterpart = true;
        break;
      }
    }
    if (!counterpart) {
      ctx.note("auth_stall", "job " + job + ": no usable counterpart for " + ar + " on " + *h);
      return;
    }
  }
  ctx.stage({fn::submitted, {job, *h}}, true);
}

void host_mapping(StepContext& ctx, const EntityIndex& ix, const std::string& job) {
  const GridState& s = ctx.state();
  if (sym(s, {fn::mapped_host, {job}})) return;
  ctx.rule(host_mapping_rule);

  std::vector<std::string> candidates;
  for (const std::string& h : s.members(uni::host)) {
    if (host_covers(s, ix, job, h)) candidates.push_back(h);
  }
  if (candidates.empty()) {
    ctx.note_stall(job, "host");
    return;
  }
  ctx.stage({fn::mapped_host, {job}}, *ctx.choose(candidates));
}

void broker_selection(StepContext& ctx, const EntityIndex& ix, const std::string& job) {
  (void)ix;
  const GridState& s = ctx.state();
  auto b = sym(s, {fn::mapped_broker, {job}});
  if (!b) return;
  if (is_true(s, {fn::submitted, {job, *b}})) return;
  auto user = sym(s, {fn::user_of, {job}});
  if (!user) return;
  ctx.rule(broker_selection_rule);

  bool usable = false;
  for (const std::string& pr : s.members(uni::presource)) {
    if (!is_true(s, {fn::can_use, {*user, pr}})) continue;
    for (const std::string& h : s.members(uni::host)) {
      if (is_true(s, {fn::belongs_to, {pr, h}}) && is_true(s, {fn::manages, {h, *b}})) {
        usable = true;
        break;
      }
    }
    if (usable) break;
  }
  if (!usable) {
    ctx.note("auth_stall", "job " + job + ": broker " + *b + " manages no usable host");
    return;
  }
  ctx.stage({fn::submitted, {job, *b}}, true);
}

void broker_mapping(StepContext& ctx, const EntityIndex& ix, const std::string& job) {
  const GridState& s = ctx.state();
  if (sym(s, {fn::mapped_broker, {job}})) return;
  ctx.rule(broker_mapping_rule);

  std::vector<std::string> candidates;
  for (const std::string& b : s.members(uni::broker)) {
    if (broker_covers(s, ix, job, b)) candidates.push_back(b);
  }
  if (candidates.empty()) {
    ctx.note_stall(job, "broker");
    return;
  }
  ctx.stage({fn::mapped_broker, {job}}, *ctx.choose(candidates));
}

double broker_perf(const GridState& s, const EntityIndex& ix, const std::string& broker) {
  const BrokerDecl* decl = ix.brokers.at(broker);
  if (!decl->perf.dynamic) return decl->perf.value;
  std::uint64_t done = 0, failed = 0;
  for (const std::string& j : s.members(uni::job)) {
    if (!is_true(s, {fn::submitted, {j, broker}})) continue;
    auto st = sym(s, {fn::job_state, {j}});
    if (st == std::string(kw::done)) ++done;
    if (st == std::string(kw::failed)) ++failed;
  }
  std::uint64_t finished = done + failed;
  if (finished == 0) return 1.0;
  return static_cast<double>(done) / static_cast<double>(finished);
}

double count_rank(const EntityIndex& ix, const RankPolicyDecl& policy, const std::string& host) {
  double rank = 0.0;
  auto it = ix.host_prs.find(host);
  if (it == ix.host_prs.end()) return 0.0;
  for (const std::string& pr : it->second) {
    const Attr& a = ix.attr_record.at(pr);
    if (a.kind != AttrKind::capacity) continue;
    auto w = policy.weights.find(a.key);
    if (w == policy.weights.end()) continue;
    rank += w->second * a.amount;
  }
  return rank;
}

ScoreVector broker_scores(const GridState& s, const EntityIndex& ix, const std::string& job) {
  ScoreVector sv;
  for (const std::string& b : s.members(uni::broker)) {
    sv.subjects.push_back(b);
    sv.scores.push_back(broker_covers(s, ix, job, b) ? broker_perf(s, ix, b) : 0.0);
  }
  return sv;
}

ScoreVector host_scores(const GridState& s, const EntityIndex& ix, const std::string& job,
                        const RankPolicyDecl& policy) {
  ScoreVector sv;
  for (const std::string& h : s.members(uni::host)) {
    sv.subjects.push_back(h);
    sv.scores.push_back(host_covers(s, ix, job, h) ? count_rank(ix, policy, h) : 0.0);
  }
  return sv;
}

void refined_broker_mapping(StepContext& ctx, const EntityIndex& ix, const std::string& job) {
  const GridState& s = ctx.state();
  if (sym(s, {fn::mapped_broker, {job}})) return;
  ctx.rule(broker_mapping_rule);

  auto pick = pick_max(ctx, broker_scores(s, ix, job));
  if (!pick) {
    ctx.note_stall(job, "broker");
    return;
  }
  ctx.stage({fn::mapped_broker, {job}}, *pick);
}

void refined_host_mapping(StepContext& ctx, const EntityIndex& ix, const std::string& job) {
  const GridState& s = ctx.state();
  if (sym(s, {fn::mapped_host, {job}})) return;

  const JobDecl* decl = ix.jobs.at(job);
  if (!decl->policy) {
    ctx.note("host_mapping_fallback", "job " + job + " has no policy requirement");
    host_mapping(ctx, ix, job);
    return;
  }
  ctx.rule(host_mapping_rule);

  const RankPolicyDecl* policy = ix.policies.at(*decl->policy);
  auto pick = pick_max(ctx, host_scores(s, ix, job, *policy));
  if (!pick) {
    ctx.note_stall(job, "host");
    return;
  }
  ctx.stage({fn::mapped_host, {job}}, *pick);
}

}  // namespace gridsim::brokering
