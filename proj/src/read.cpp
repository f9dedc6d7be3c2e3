// SPDX-License-Identifier: Apache-2.0
#include "gridsim/read.hpp"

#include <algorithm>

namespace gridsim {

std::vector<std::string> processes_of_job(const GridState& s, const std::string& job) {
  std::vector<std::string> out;
  for (const std::string& p : s.members(uni::process)) {
    if (sym(s, {fn::job_of, {p}}) == job) out.push_back(p);
  }
  return out;
}

std::vector<std::string> used_resources(const GridState& s, const std::string& process) {
  std::vector<std::string> out;
  for (const std::string& pr : s.members(uni::presource)) {
    if (is_true(s, {fn::uses, {process, pr}})) out.push_back(pr);
  }
  return out;
}

std::vector<std::string> requested_ars(const GridState& s, const std::string& process) {
  std::vector<std::string> out;
  for (const std::string& ar : s.members(uni::aresource)) {
    if (is_true(s, {fn::proc_request, {process, ar}})) out.push_back(ar);
  }
  return out;
}

std::vector<std::string> fifo_waiters(const GridState& s, const std::string& pr) {
  std::vector<std::string> waiters;
  for (const std::string& p : s.members(uni::process)) {
    if (is_true(s, {fn::uses, {p, pr}})) waiters.push_back(p);
  }
  std::stable_sort(waiters.begin(), waiters.end(),
                   [&](const std::string& a, const std::string& b) {
                     auto ea = int_of(s, {fn::enqueued_at, {pr, a}}).value_or(0);
                     auto eb = int_of(s, {fn::enqueued_at, {pr, b}}).value_or(0);
                     if (ea != eb) return ea < eb;
                     return a < b;
                   });
  return waiters;
}

}  // namespace gridsim
