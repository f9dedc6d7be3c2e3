// SPDX-License-Identifier: Apache-2.0
#include "gridsim/model.hpp"

#include <algorithm>

namespace gridsim {

std::string task_id(const std::string& process) { return process + ".task"; }
std::string location_id(const std::string& host) { return host + ".loc"; }
std::string ar_id(const std::string& process, std::size_t k) {
  return process + ".ar" + std::to_string(k);
}
std::string req_id(const std::string& job, std::size_t k) {
  return job + ".req" + std::to_string(k);
}
std::string policy_req_id(const std::string& job) { return job + ".policyreq"; }
std::string prop_id(const std::string& broker, std::size_t k) {
  return broker + ".prop" + std::to_string(k);
}
std::string attr_atom_id(const std::string& owner) { return owner + ".attr"; }

std::vector<RequirementRef> EntityIndex::job_resource_requests(const std::string& job) const {
  std::vector<RequirementRef> out;
  auto it = job_requirements.find(job);
  if (it == job_requirements.end()) return out;
  for (const auto& ref : it->second) {
    if (ref.role == RequirementRole::abstract_resource) out.push_back(ref);
  }
  return out;
}

EntityIndex build_index(const Scenario& scenario) {
  EntityIndex ix;
  ix.scenario = &scenario;

  for (const auto& u : scenario.users) {
    ix.users[u.id] = &u;
    ix.user_ids.push_back(u.id);
  }
  for (const auto& h : scenario.hosts) {
    ix.hosts[h.id] = &h;
    ix.host_ids.push_back(h.id);
    for (const auto& pr : h.resources) {
      ix.resources[pr.id] = &pr;
      ix.host_of_resource[pr.id] = h.id;
      ix.host_prs[h.id].push_back(pr.id);
      ix.attr_record[pr.id] = pr.attr;
    }
  }
  for (const auto& b : scenario.brokers) {
    ix.brokers[b.id] = &b;
    ix.broker_ids.push_back(b.id);
    for (std::size_t k = 0; k < b.properties.size(); ++k) {
      std::string pid = prop_id(b.id, k);
      ix.broker_props[b.id].push_back(pid);
      ix.attr_record[pid] = b.properties[k];
    }
  }
  for (const auto& p : scenario.policies) ix.policies[p.name] = &p;

  for (const auto& j : scenario.jobs) {
    ix.jobs[j.id] = &j;
    ix.job_ids.push_back(j.id);
    auto& reqs = ix.job_requirements[j.id];
    for (std::size_t k = 0; k < j.broker_requirements.size(); ++k) {
      std::string rid = req_id(j.id, k);
      reqs.push_back(RequirementRef{rid, RequirementRole::broker_property,
                                    j.broker_requirements[k]});
      ix.attr_record[rid] = j.broker_requirements[k];
    }
    if (j.policy) {
      std::string rid = policy_req_id(j.id);
      Attr pa = keyword_attr("policy", *j.policy);
      reqs.push_back(RequirementRef{rid, RequirementRole::policy, pa});
      ix.attr_record[rid] = pa;
    }
    for (const auto& p : j.processes) {
      ix.processes[p.id] = &p;
      ix.process_ids.push_back(p.id);
      ix.job_of_process[p.id] = j.id;
      for (std::size_t k = 0; k < p.needs.size(); ++k) {
        std::string aid = ar_id(p.id, k);
        ix.process_ars[p.id].push_back(aid);
        ix.attr_record[aid] = p.needs[k];
        reqs.push_back(RequirementRef{aid, RequirementRole::abstract_resource, p.needs[k]});
      }
    }
  }

  std::sort(ix.user_ids.begin(), ix.user_ids.end());
  std::sort(ix.job_ids.begin(), ix.job_ids.end());
  std::sort(ix.process_ids.begin(), ix.process_ids.end());
  std::sort(ix.host_ids.begin(), ix.host_ids.end());
  std::sort(ix.broker_ids.begin(), ix.broker_ids.end());
  return ix;
}

namespace {

void declare_signature(GridState& s) {
  Signature& sig = s.signature();
  const auto sym = ValueKind::symbol;
  const auto boolean = ValueKind::boolean;
  sig.declare(fn::job_of, 1, sym);
  sig.declare(fn::user_of, 1, sym);
  sig.declare(fn::globaluser, 1, sym);
  sig.declare(fn::localuser, 1, sym);
  sig.declare(fn::submitted, 2, boolean);
  sig.declare(fn::request, 2, boolean);
  sig.declare(fn::proc_request, 2, boolean);
  sig.declare(fn::uses, 2, boolean);
  sig.declare(fn::mapped, 1, sym);
  sig.declare(fn::belongs_to, 2, boolean);
  sig.declare(fn::installed, 2, boolean);
  sig.declare(fn::attr_of, 1, sym);
  sig.declare(fn::location_of, 1, sym);
  sig.declare(fn::handler, 1, sym);
  sig.declare(fn::type_of, 1, sym);
  sig.declare(fn::can_login, 2, boolean);
  sig.declare(fn::can_use, 2, boolean);
  sig.declare(fn::job_state, 1, sym);
  sig.declare(fn::proc_state, 1, sym);
  sig.declare(fn::event, 1, sym);
  sig.declare(fn::task_of, 1, sym);
  sig.declare(fn::mapped_host, 1, sym);
  sig.declare(fn::mapped_resource, 2, sym);
  sig.declare(fn::mapped_broker, 1, sym);
  sig.declare(fn::manages, 2, boolean);
  sig.declare(fn::have, 2, boolean);
  sig.declare(fn::occupant, 1, sym);
  sig.declare(fn::enqueued_at, 2, ValueKind::integer);

  for (const char* u : {uni::user, uni::job, uni::process, uni::task, uni::host, uni::presource,
                        uni::aresource, uni::location, uni::attr, uni::broker, uni::requirement,
                        uni::property, uni::metabroker}) {
    s.declare_universe(u);
  }
}

}  // namespace

GridState init_state(const Scenario& scenario) {
  EntityIndex ix = build_index(scenario);
  GridState s;
  declare_signature(s);

  UpdateSet init;
  auto set = [&init](const char* f, std::vector<std::string> args, Value v) {
    init.stage(Location{f, std::move(args)}, std::move(v));
  };

  for (const auto& u : scenario.users) s.add_member(uni::user, u.id);

  s.add_member(uni::attr, kw::direct);
  s.add_member(uni::attr, kw::handled);

  for (const auto& h : scenario.hosts) {
    s.add_member(uni::host, h.id);
    s.add_member(uni::location, location_id(h.id));
    for (const auto& pr : h.resources) {
      s.add_member(uni::presource, pr.id);
      s.add_member(uni::property, pr.id);  // PRESOURCE is a subset of PROPERTY
      s.add_member(uni::attr, attr_atom_id(pr.id));
      set(fn::attr_of, {pr.id}, attr_atom_id(pr.id));
      set(fn::location_of, {pr.id}, location_id(h.id));
      set(fn::type_of, {pr.id},
          std::string(pr.type == ResourceType::direct ? kw::direct : kw::handled));
    }
  }

  for (const auto& b : scenario.brokers) {
    s.add_member(uni::broker, b.id);
    for (const std::string& pid : ix.broker_props[b.id]) {
      s.add_member(uni::property, pid);
      s.add_member(uni::attr, attr_atom_id(pid));
      set(fn::attr_of, {pid}, attr_atom_id(pid));
    }
  }

  for (const auto& j : scenario.jobs) {
    s.add_member(uni::job, j.id);
    if (ix.users.find(j.user) == ix.users.end()) {
      throw InitError("initial-state violation: user(" + j.id + ") must exist (unknown user " +
                      j.user + ")");
    }
    set(fn::user_of, {j.id}, j.user);
    set(fn::globaluser, {j.id}, j.user);
    if (j.processes.empty()) {
      throw InitError("initial-state violation: job(p) != undef requires at least one process "
                      "(job " + j.id + " has none)");
    }
    for (const auto& ref : ix.job_requirements[j.id]) {
      s.add_member(uni::requirement, ref.id);
      s.add_member(uni::attr, attr_atom_id(ref.id));
      set(fn::attr_of, {ref.id}, attr_atom_id(ref.id));
      if (ref.role == RequirementRole::abstract_resource) s.add_member(uni::aresource, ref.id);
    }
    if (ix.job_requirements[j.id].empty()) {
      throw InitError("initial-state violation: request(j, r) = true must hold for some r "
                      "(job " + j.id + " has no requirements)");
    }
    for (const auto& p : j.processes) {
      s.add_member(uni::process, p.id);
      s.add_member(uni::task, task_id(p.id));
      set(fn::job_of, {p.id}, j.id);
      if (p.needs.empty()) {
        throw InitError("initial-state violation: procRequest(p, ar) = true must hold for some "
                        "ar (process " + p.id + " requests nothing)");
      }
    }
  }

  if (scenario.config.mode == SimMode::meta) s.add_member(uni::metabroker, "metabroker");

  // Boolean relations, materialized over the full cartesian products so the
  // initial interpretation reads false rather than undef.
  for (const auto& u : scenario.users) {
    for (const std::string& h : ix.host_ids) {
      bool ok = std::find(u.can_login.begin(), u.can_login.end(), h) != u.can_login.end();
      set(fn::can_login, {u.id, h}, ok);
    }
    bool usable_any = false;
    for (const auto& [pr, _] : ix.resources) {
      bool ok = std::find(u.can_use.begin(), u.can_use.end(), pr) != u.can_use.end();
      usable_any = usable_any || ok;
      set(fn::can_use, {u.id, pr}, ok);
    }
    if (!usable_any) {
      throw InitError("initial-state violation: canUse(u, pr) = true must hold for some pr "
                      "(user " + u.id + ")");
    }
  }

  for (const auto& [pr, host] : ix.host_of_resource) {
    for (const std::string& h : ix.host_ids) set(fn::belongs_to, {pr, h}, h == host);
  }

  for (const std::string& h : ix.host_ids) {
    for (const std::string& b : ix.broker_ids) {
      const BrokerDecl* bd = ix.brokers.at(b);
      bool managed = std::find(bd->hosts.begin(), bd->hosts.end(), h) != bd->hosts.end();
      set(fn::manages, {h, b}, managed);
    }
  }

  for (const std::string& b : ix.broker_ids) {
    const auto& own = ix.broker_props.count(b) ? ix.broker_props.at(b) : std::vector<std::string>{};
    for (const std::string& prop : s.members(uni::property)) {
      bool has = std::find(own.begin(), own.end(), prop) != own.end();
      set(fn::have, {b, prop}, has);
    }
  }

  for (const std::string& j : ix.job_ids) {
    const auto& own = ix.job_requirements.at(j);
    for (const std::string& r : s.members(uni::requirement)) {
      bool requested = std::any_of(own.begin(), own.end(),
                                   [&](const RequirementRef& ref) { return ref.id == r; });
      set(fn::request, {j, r}, requested);
    }
  }

  for (const std::string& p : ix.process_ids) {
    const auto& own = ix.process_ars.count(p) ? ix.process_ars.at(p) : std::vector<std::string>{};
    for (const std::string& ar : s.members(uni::aresource)) {
      bool requested = std::find(own.begin(), own.end(), ar) != own.end();
      set(fn::proc_request, {p, ar}, requested);
    }
    for (const auto& [pr, _] : ix.resources) set(fn::uses, {p, pr}, false);
  }

  // Local mode: the user has chosen the host manually and submitted the job.
  if (scenario.config.mode == SimMode::local) {
    for (const auto& j : scenario.jobs) {
      if (!j.manual_host) {
        throw InitError("local mode requires a manual host for every job (job " + j.id + ")");
      }
      if (ix.hosts.find(*j.manual_host) == ix.hosts.end()) {
        throw InitError("manual host " + *j.manual_host + " of job " + j.id + " is not declared");
      }
      set(fn::mapped_host, {j.id}, *j.manual_host);
      set(fn::submitted, {j.id, *j.manual_host}, true);
    }
  }

  s.fire(init);
  return s;
}

}  // namespace gridsim
