// SPDX-License-Identifier: Apache-2.0
#include "gridsim/rules.hpp"

#include <algorithm>
#include <set>

#include "gridsim/attr.hpp"
#include "gridsim/read.hpp"

namespace gridsim::rules {

namespace {

bool attr_compatible(const EntityIndex& ix, const std::string& required,
                     const std::string& offered) {
  return compatible(ix.attr_record.at(required), ix.attr_record.at(offered));
}

bool contains(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

/// Among all live processes eligible to trigger handler creation for pr,
/// the lowest-id one creates it. All job agents compute the same winner
/// from the shared snapshot, so exactly one extend fires per resource.
std::string handler_creator(const GridState& s, const std::string& pr) {
  std::string winner;
  for (const std::string& q : s.members(uni::process)) {
    auto job = sym(s, {fn::job_of, {q}});
    if (!job) continue;
    auto user = sym(s, {fn::user_of, {*job}});
    if (!user || !is_true(s, {fn::can_use, {*user, pr}})) continue;
    for (const std::string& ar : requested_ars(s, q)) {
      if (sym(s, {fn::mapped_resource, {q, ar}}) == pr) {
        if (winner.empty() || q < winner) winner = q;
        break;
      }
    }
  }
  return winner;
}

/// Same-step FIFO promotion for resources whose occupant is in `removed`.
void release_occupancies(StepContext& ctx, const std::vector<std::string>& removed) {
  const GridState& s = ctx.state();
  for (const std::string& pr : s.members(uni::presource)) {
    auto occ = sym(s, {fn::occupant, {pr}});
    if (!occ || !contains(removed, *occ)) continue;
    std::string next;
    for (const std::string& q : fifo_waiters(s, pr)) {
      if (q != *occ && !contains(removed, q)) {
        next = q;
        break;
      }
    }
    ctx.stage({fn::occupant, {pr}}, next.empty() ? Value{Undef{}} : Value{next});
  }
}

}  // namespace

void resource_selection(StepContext& ctx, const EntityIndex& ix, const std::string& job) {
  (void)ix;
  const GridState& s = ctx.state();
  auto host = sym(s, {fn::mapped_host, {job}});
  if (!host) return;
  auto user = sym(s, {fn::user_of, {job}});
  if (!user) return;
  ctx.rule(resource_selection_rule);

  // A resource's handler is imported at most once per step, even when
  // several of this job's requests land on it.
  std::set<std::string> handler_created;
  for (const std::string& p : processes_of_job(s, job)) {
    for (const std::string& ar : requested_ars(s, p)) {
      auto pr = sym(s, {fn::mapped_resource, {p, ar}});
      if (!pr) continue;
      if (!is_true(s, {fn::can_use, {*user, *pr}})) {
        ctx.note("auth_stall", "job " + job + ": canUse(" + *user + "," + *pr + ") = false");
        continue;
      }
      auto loc = sym(s, {fn::location_of, {*pr}});
      if (sym(s, {fn::type_of, {*pr}}) == std::string(kw::direct)) {
        ctx.stage({fn::mapped, {p}}, *loc);
        ctx.stage({fn::installed, {task_id(p), *loc}}, true);
      } else if (!sym(s, {fn::handler, {*pr}}) && !handler_created.count(*pr) &&
                 handler_creator(s, *pr) == p) {
        handler_created.insert(*pr);
        std::string handler_proc = ctx.extend(uni::process);
        std::string handler_task = ctx.extend(uni::task);
        ctx.stage({fn::mapped, {handler_proc}}, *loc);
        ctx.stage({fn::installed, {handler_task, *loc}}, true);
        ctx.stage({fn::handler, {*pr}}, handler_proc);
        for (const std::string& other : s.members(uni::aresource)) {
          ctx.stage({fn::proc_request, {handler_proc, other}}, false);
        }
      }
      ctx.stage({fn::proc_request, {p, ar}}, false);
      ctx.stage({fn::uses, {p, *pr}}, true);
      ctx.stage({fn::enqueued_at, {*pr, p}}, static_cast<std::int64_t>(ctx.step()));
    }
  }
}

void resource_mapping(StepContext& ctx, const EntityIndex& ix, const std::string& job) {
  const GridState& s = ctx.state();
  auto host = sym(s, {fn::mapped_host, {job}});
  if (!host) return;
  ctx.rule(resource_mapping_rule);

  for (const std::string& p : processes_of_job(s, job)) {
    for (const std::string& ar : requested_ars(s, p)) {
      if (sym(s, {fn::mapped_resource, {p, ar}})) continue;
      std::vector<std::string> candidates;
      for (const std::string& pr : s.members(uni::presource)) {
        if (is_true(s, {fn::belongs_to, {pr, *host}}) && attr_compatible(ix, ar, pr)) {
          candidates.push_back(pr);
        }
      }
      if (candidates.empty()) {
        ctx.note_stall(job, "resource");
        continue;
      }
      ctx.stage({fn::mapped_resource, {p, ar}}, *ctx.choose(candidates));
    }
  }
}

void grant_occupancy(StepContext& ctx, const EntityIndex& ix, const std::string& host) {
  const GridState& s = ctx.state();
  ctx.rule(grant_rule);
  auto it = ix.host_prs.find(host);
  if (it == ix.host_prs.end()) return;
  std::vector<std::string> prs = it->second;
  std::sort(prs.begin(), prs.end());

  for (const std::string& pr : prs) {
    auto occ = sym(s, {fn::occupant, {pr}});
    if (occ && s.is_member(uni::process, *occ)) continue;
    std::vector<std::string> waiters = fifo_waiters(s, pr);
    if (occ) {
      // occupant died without a same-step promotion; clear or re-grant
      ctx.stage({fn::occupant, {pr}},
                waiters.empty() ? Value{Undef{}} : Value{waiters.front()});
    } else if (!waiters.empty()) {
      ctx.stage({fn::occupant, {pr}}, waiters.front());
    }
  }
}

void state_transition(StepContext& ctx, const EntityIndex& ix, const std::string& job,
                      SimMode mode) {
  (void)ix;
  const GridState& s = ctx.state();
  ctx.rule(state_transition_rule);
  std::vector<std::string> live = processes_of_job(s, job);

  bool any_running = false;
  bool any_waiting = false;
  std::vector<std::string> aborted;

  for (const std::string& p : live) {
    std::vector<std::string> used = used_resources(s, p);
    bool occupies_all = !used.empty();
    for (const std::string& pr : used) {
      if (sym(s, {fn::occupant, {pr}}) != p) occupies_all = false;
    }
    bool queued_or_mapped = sym(s, {fn::mapped, {p}}).has_value() || !used.empty();

    auto cur = sym(s, {fn::proc_state, {p}});
    if (occupies_all) {
      any_running = true;
      if (cur != std::string(kw::running)) ctx.stage({fn::proc_state, {p}}, std::string(kw::running));
    } else if (queued_or_mapped) {
      any_waiting = true;
      if (cur != std::string(kw::waiting)) ctx.stage({fn::proc_state, {p}}, std::string(kw::waiting));
    }

    for (const std::string& pr : used) {
      auto loc = sym(s, {fn::location_of, {pr}});
      if (!loc) continue;
      for (const std::string& t : s.members(uni::task)) {
        if (is_true(s, {fn::installed, {t, *loc}}) &&
            sym(s, {fn::event, {t}}) == std::string(kw::abort)) {
          aborted.push_back(p);
          break;
        }
      }
      if (!aborted.empty() && aborted.back() == p) break;
    }
  }

  bool host_submitted = false;
  for (const std::string& h : s.members(uni::host)) {
    if (is_true(s, {fn::submitted, {job, h}})) host_submitted = true;
  }
  bool broker_submitted = false;
  for (const std::string& b : s.members(uni::broker)) {
    if (is_true(s, {fn::submitted, {job, b}})) broker_submitted = true;
  }

  auto cur = sym(s, {fn::job_state, {job}});
  bool terminal = cur == std::string(kw::done) || cur == std::string(kw::failed);
  if (terminal) return;

  std::optional<std::string> target;
  if (!aborted.empty()) {
    target = kw::failed;
  } else if (!live.empty()) {
    if (any_running) {
      target = kw::running;
    } else if (any_waiting || (mode == SimMode::meta && host_submitted)) {
      target = kw::waiting;
    } else if (mode == SimMode::meta ? broker_submitted : host_submitted) {
      target = kw::submitted;
    }
  }
  if (target && target != cur) ctx.stage({fn::job_state, {job}}, *target);

  // Abort removals; the freed resources are re-granted by the LRM next step.
  std::sort(aborted.begin(), aborted.end());
  aborted.erase(std::unique(aborted.begin(), aborted.end()), aborted.end());
  for (const std::string& p : aborted) ctx.stage(Location{uni::process, {p}}, false);
}

void termination(StepContext& ctx, const EntityIndex& ix, const std::string& job) {
  (void)ix;
  const GridState& s = ctx.state();
  ctx.rule(termination_rule);
  std::vector<std::string> live = processes_of_job(s, job);
  auto job_state = sym(s, {fn::job_state, {job}});

  std::vector<std::string> removed;
  for (const std::string& p : live) {
    if (sym(s, {fn::proc_state, {p}}) == std::string(kw::running) &&
        sym(s, {fn::event, {task_id(p)}}) == std::string(kw::terminate)) {
      removed.push_back(p);
    }
  }
  if (job_state == std::string(kw::failed)) {
    for (const std::string& p : live) {
      if (!contains(removed, p)) removed.push_back(p);
    }
  }
  std::sort(removed.begin(), removed.end());
  for (const std::string& p : removed) ctx.stage(Location{uni::process, {p}}, false);
  release_occupancies(ctx, removed);

  if (live.empty() && job_state == std::string(kw::running)) {
    ctx.stage({fn::job_state, {job}}, std::string(kw::done));
  }
}

}  // namespace gridsim::rules
