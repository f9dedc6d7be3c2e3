// SPDX-License-Identifier: Apache-2.0
#include "gridsim/scenario_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>

#include "gridsim/value.hpp"

namespace gridsim {

namespace {

bool valid_id(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
  }
  return true;
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

struct Parser {
  explicit Parser(std::istream& s) : in(s) {}

  std::istream& in;
  std::size_t line_no = 0;
  std::string line;
  Scenario sc;

  // entity id -> declaring line, for duplicate reports
  std::map<std::string, std::size_t> declared;

  [[noreturn]] void fail(const std::string& msg, std::size_t col = 1) const {
    throw ScenarioError(msg, line_no, col);
  }

  std::size_t col_of(const std::string& token) const {
    std::size_t pos = line.find(token);
    return pos == std::string::npos ? 1 : pos + 1;
  }

  void check_new_id(const std::string& id) {
    if (!valid_id(id)) fail("invalid identifier '" + id + "' (allowed: [A-Za-z0-9_-])", col_of(id));
    auto [it, inserted] = declared.try_emplace(id, line_no);
    if (!inserted) {
      fail("duplicate identifier '" + id + "' (first declared at line " +
               std::to_string(it->second) + ")",
           col_of(id));
    }
  }

  double parse_real(const std::string& tok) {
    char* end = nullptr;
    double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0') fail("expected a real number, got '" + tok + "'",
                                                 col_of(tok));
    return v;
  }

  std::uint64_t parse_u64(const std::string& tok) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(tok.c_str(), &end, 10);
    if (end == tok.c_str() || *end != '\0' || tok[0] == '-') {
      fail("expected a non-negative integer, got '" + tok + "'", col_of(tok));
    }
    return v;
  }

  // "key=value" -> (key, value)
  std::pair<std::string, std::string> split_eq(const std::string& tok) {
    std::size_t eq = tok.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= tok.size()) {
      fail("expected key=value, got '" + tok + "'", col_of(tok));
    }
    return {tok.substr(0, eq), tok.substr(eq + 1)};
  }

  Attr parse_need(const std::string& tok, const std::vector<std::string>& rest) {
    // key>=real (capacity, requires unit=u) or key=string (keyword)
    std::size_t ge = tok.find(">=");
    if (ge != std::string::npos) {
      std::string key = tok.substr(0, ge);
      std::string amount = tok.substr(ge + 2);
      if (!valid_id(key)) fail("invalid attr key '" + key + "'", col_of(tok));
      if (rest.size() != 1) fail("capacity need requires a single unit=<u> token", col_of(tok));
      auto [uk, uv] = split_eq(rest[0]);
      if (uk != "unit" || !valid_id(uv)) fail("expected unit=<u>, got '" + rest[0] + "'",
                                              col_of(rest[0]));
      return capacity_attr(key, parse_real(amount), uv);
    }
    auto [key, value] = split_eq(tok);
    if (!valid_id(key)) fail("invalid attr key '" + key + "'", col_of(tok));
    if (!valid_id(value)) fail("invalid keyword value '" + value + "'", col_of(tok));
    if (!rest.empty()) fail("unexpected trailing tokens after keyword need", col_of(rest[0]));
    return keyword_attr(key, value);
  }

  void parse();
  void parse_user_line(UserDecl& u, const std::vector<std::string>& toks);
  void parse_broker_line(BrokerDecl& b, const std::vector<std::string>& toks);
  void parse_host_line(HostDecl& h, const std::vector<std::string>& toks);
  void parse_job_line(JobDecl& j, const std::vector<std::string>& toks);
  void parse_policy_line(RankPolicyDecl& p, const std::vector<std::string>& toks);
  void parse_fault_line(const std::vector<std::string>& toks);
  void parse_config_line(const std::vector<std::string>& toks);
};

void Parser::parse_user_line(UserDecl& u, const std::vector<std::string>& toks) {
  if (toks[0] == "can_login" || toks[0] == "can_use") {
    if (toks.size() < 2 || toks[1] != "=") fail("expected '" + toks[0] + " = <list>'");
    auto& target = toks[0] == "can_login" ? u.can_login : u.can_use;
    target.assign(toks.begin() + 2, toks.end());
    return;
  }
  if (toks[0] == "local") {
    // local <host-id> = <name>
    if (toks.size() != 4 || toks[2] != "=") fail("expected 'local <host> = <name>'");
    if (!valid_id(toks[3])) fail("invalid local account name '" + toks[3] + "'", col_of(toks[3]));
    u.local_ids[toks[1]] = toks[3];
    return;
  }
  fail("unknown key '" + toks[0] + "' in [user]");
}

void Parser::parse_broker_line(BrokerDecl& b, const std::vector<std::string>& toks) {
  if (toks[0] == "property") {
    if (toks.size() != 2) fail("expected 'property <key>=<value>'");
    auto [k, v] = split_eq(toks[1]);
    if (!valid_id(k) || !valid_id(v)) fail("invalid property '" + toks[1] + "'", col_of(toks[1]));
    b.properties.push_back(keyword_attr(k, v));
    return;
  }
  if (toks[0] == "hosts") {
    if (toks.size() < 2 || toks[1] != "=") fail("expected 'hosts = <list>'");
    b.hosts.assign(toks.begin() + 2, toks.end());
    return;
  }
  if (toks[0] == "perf") {
    if (toks.size() != 3 || toks[1] != "=") fail("expected 'perf = <real>|dynamic'");
    if (toks[2] == "dynamic") {
      b.perf.dynamic = true;
    } else {
      b.perf.dynamic = false;
      b.perf.value = parse_real(toks[2]);
    }
    return;
  }
  fail("unknown key '" + toks[0] + "' in [broker]");
}

void Parser::parse_host_line(HostDecl& h, const std::vector<std::string>& toks) {
  if (toks[0] != "resource") fail("unknown key '" + toks[0] + "' in [host]");
  if (toks.size() < 4) fail("expected 'resource <id> key=<k> ... type=<t>'");
  PhysicalResourceDecl pr;
  pr.id = toks[1];
  check_new_id(pr.id);

  std::map<std::string, std::string> kv;
  for (std::size_t i = 2; i < toks.size(); ++i) {
    auto [k, v] = split_eq(toks[i]);
    if (!kv.emplace(k, v).second) fail("repeated '" + k + "' in resource line", col_of(toks[i]));
  }
  auto take = [&](const char* key) -> std::string {
    auto it = kv.find(key);
    if (it == kv.end()) return "";
    std::string v = it->second;
    kv.erase(it);
    return v;
  };

  std::string key = take("key");
  if (!valid_id(key)) fail("resource needs key=<attr-key>");
  std::string keyword = take("keyword");
  std::string capacity = take("capacity");
  std::string unit = take("unit");
  std::string type = take("type");
  if (!kv.empty()) fail("unknown token '" + kv.begin()->first + "=' in resource line");

  if (!keyword.empty() == !capacity.empty()) {
    fail("resource needs exactly one of keyword=<string> or capacity=<real>");
  }
  if (!keyword.empty()) {
    if (!valid_id(keyword)) fail("invalid keyword value '" + keyword + "'");
    if (!unit.empty()) fail("keyword resources take no unit");
    pr.attr = keyword_attr(key, keyword);
  } else {
    if (!valid_id(unit)) fail("capacity resources need unit=<u>");
    pr.attr = capacity_attr(key, parse_real(capacity), unit);
  }
  if (type == "direct") {
    pr.type = ResourceType::direct;
  } else if (type == "handled") {
    pr.type = ResourceType::handled;
  } else {
    fail("resource needs type=direct or type=handled");
  }
  h.resources.push_back(std::move(pr));
}

void Parser::parse_job_line(JobDecl& j, const std::vector<std::string>& toks) {
  if (toks[0] == "user") {
    if (toks.size() != 3 || toks[1] != "=") fail("expected 'user = <id>'");
    j.user = toks[2];
    return;
  }
  if (toks[0] == "host") {
    if (toks.size() != 3 || toks[1] != "=") fail("expected 'host = <id>'");
    j.manual_host = toks[2];
    return;
  }
  if (toks[0] == "require") {
    if (toks.size() == 3 && toks[1] == "broker") {
      auto [k, v] = split_eq(toks[2]);
      if (!valid_id(k) || !valid_id(v)) fail("invalid requirement '" + toks[2] + "'");
      j.broker_requirements.push_back(keyword_attr(k, v));
      return;
    }
    if (toks.size() == 3 && toks[1] == "policy") {
      if (j.policy) fail("at most one policy requirement per job");
      if (!valid_id(toks[2])) fail("invalid policy name '" + toks[2] + "'");
      j.policy = toks[2];
      return;
    }
    fail("expected 'require broker <key>=<value>' or 'require policy <name>'");
  }
  if (toks[0] == "process") {
    // process <id> needs <attr-key>{=<string>|>=<real> unit=<u>}
    if (toks.size() < 4 || toks[2] != "needs") fail("expected 'process <id> needs <need>'");
    const std::string& pid = toks[1];
    auto it = std::find_if(j.processes.begin(), j.processes.end(),
                           [&](const ProcessDecl& p) { return p.id == pid; });
    if (it == j.processes.end()) {
      check_new_id(pid);
      j.processes.push_back(ProcessDecl{pid, {}});
      it = j.processes.end() - 1;
    }
    it->needs.push_back(parse_need(toks[3], {toks.begin() + 4, toks.end()}));
    return;
  }
  fail("unknown key '" + toks[0] + "' in [job]");
}

void Parser::parse_policy_line(RankPolicyDecl& p, const std::vector<std::string>& toks) {
  if (toks[0] != "weight") fail("unknown key '" + toks[0] + "' in [policy]");
  if (toks.size() != 4 || toks[2] != "=") fail("expected 'weight <attr-key> = <real>'");
  if (!valid_id(toks[1])) fail("invalid attr key '" + toks[1] + "'");
  if (p.weights.count(toks[1])) fail("repeated weight for '" + toks[1] + "'");
  p.weights[toks[1]] = parse_real(toks[3]);
}

void Parser::parse_fault_line(const std::vector<std::string>& toks) {
  FaultDecl f;
  if (toks[0] == "abort") {
    f.kind = FaultKind::abort_task;
  } else if (toks[0] == "terminate") {
    f.kind = FaultKind::terminate_task;
  } else {
    fail("expected 'abort' or 'terminate' in [fault]");
  }
  if (toks.size() != 3) fail("expected '" + toks[0] + " process=<id> at=<step>'");
  auto [pk, pv] = split_eq(toks[1]);
  if (pk != "process") fail("expected process=<id>", col_of(toks[1]));
  f.process = pv;
  auto [ak, av] = split_eq(toks[2]);
  if (ak != "at") fail("expected at=<step>", col_of(toks[2]));
  f.at = parse_u64(av);
  sc.faults.push_back(std::move(f));
}

void Parser::parse_config_line(const std::vector<std::string>& toks) {
  if (toks.size() != 3 || toks[1] != "=") fail("expected '<key> = <value>' in [config]");
  const std::string& key = toks[0];
  const std::string& val = toks[2];
  if (key == "choose") {
    if (val == "lowest-id") {
      sc.config.choose.mode = ChooseMode::lowest_id;
    } else if (val == "seeded") {
      sc.config.choose.mode = ChooseMode::seeded;
    } else {
      fail("choose must be lowest-id or seeded");
    }
  } else if (key == "seed") {
    sc.config.choose.seed = parse_u64(val);
  } else if (key == "mode") {
    if (val == "local") {
      sc.config.mode = SimMode::local;
    } else if (val == "broker") {
      sc.config.mode = SimMode::broker;
    } else if (val == "meta") {
      sc.config.mode = SimMode::meta;
    } else {
      fail("mode must be local, broker or meta");
    }
  } else if (key == "matchmaking") {
    if (val == "base") {
      sc.config.matchmaking = Matchmaking::base;
    } else if (val == "refined") {
      sc.config.matchmaking = Matchmaking::refined;
    } else {
      fail("matchmaking must be base or refined");
    }
  } else if (key == "stall_limit") {
    sc.config.stall_limit = parse_u64(val);
  } else if (key == "max_steps") {
    sc.config.max_steps = parse_u64(val);
  } else {
    fail("unknown key '" + key + "' in [config]");
  }
}

void Parser::parse() {
  enum class Section { none, user, broker, host, job, policy, fault, config };
  Section section = Section::none;
  UserDecl* user = nullptr;
  BrokerDecl* broker = nullptr;
  HostDecl* host = nullptr;
  JobDecl* job = nullptr;
  RankPolicyDecl* policy = nullptr;

  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    line = raw;
    std::string text = raw;
    if (std::size_t hash = text.find('#'); hash != std::string::npos) text.resize(hash);
    text = strip(text);
    if (text.empty()) continue;

    if (text.front() == '[') {
      if (text.back() != ']') fail("unterminated section header");
      std::vector<std::string> head = split_ws(text.substr(1, text.size() - 2));
      if (head.empty()) fail("empty section header");
      const std::string& kind = head[0];
      auto need_id = [&]() -> std::string {
        if (head.size() != 2) fail("expected [" + kind + " <id>]");
        return head[1];
      };
      if (kind == "user") {
        section = Section::user;
        UserDecl u;
        u.id = need_id();
        check_new_id(u.id);
        sc.users.push_back(std::move(u));
        user = &sc.users.back();
      } else if (kind == "broker") {
        section = Section::broker;
        BrokerDecl b;
        b.id = need_id();
        check_new_id(b.id);
        sc.brokers.push_back(std::move(b));
        broker = &sc.brokers.back();
      } else if (kind == "host") {
        section = Section::host;
        HostDecl h;
        h.id = need_id();
        check_new_id(h.id);
        sc.hosts.push_back(std::move(h));
        host = &sc.hosts.back();
      } else if (kind == "job") {
        section = Section::job;
        JobDecl j;
        j.id = need_id();
        check_new_id(j.id);
        sc.jobs.push_back(std::move(j));
        job = &sc.jobs.back();
      } else if (kind == "policy") {
        section = Section::policy;
        RankPolicyDecl p;
        p.name = need_id();
        auto dup = std::any_of(sc.policies.begin(), sc.policies.end(),
                               [&](const RankPolicyDecl& q) { return q.name == p.name; });
        if (dup) fail("duplicate policy '" + p.name + "'");
        if (!valid_id(p.name)) fail("invalid policy name '" + p.name + "'");
        sc.policies.push_back(std::move(p));
        policy = &sc.policies.back();
      } else if (kind == "fault") {
        if (head.size() != 1) fail("[fault] takes no identifier");
        section = Section::fault;
      } else if (kind == "config") {
        if (head.size() != 1) fail("[config] takes no identifier");
        section = Section::config;
      } else {
        fail("unknown section '" + kind + "'");
      }
      continue;
    }

    std::vector<std::string> toks = split_ws(text);
    switch (section) {
      case Section::none: fail("content before any section header");
      case Section::user: parse_user_line(*user, toks); break;
      case Section::broker: parse_broker_line(*broker, toks); break;
      case Section::host: parse_host_line(*host, toks); break;
      case Section::job: parse_job_line(*job, toks); break;
      case Section::policy: parse_policy_line(*policy, toks); break;
      case Section::fault: parse_fault_line(toks); break;
      case Section::config: parse_config_line(toks); break;
    }
  }

  if (sc.jobs.empty()) {
    line_no = std::max<std::size_t>(line_no, 1);
    fail("no jobs declared");
  }
}

}  // namespace

Scenario parse_scenario(std::istream& in) {
  Parser p(in);
  p.parse();
  return std::move(p.sc);
}

Scenario parse_scenario_text(const std::string& text) {
  std::istringstream is(text);
  return parse_scenario(is);
}

namespace {

void validate_refs(const Scenario& s, std::vector<ValidationIssue>& out) {
  std::map<std::string, char> ids;  // id -> kind tag
  for (const auto& u : s.users) ids[u.id] = 'u';
  for (const auto& h : s.hosts) {
    ids[h.id] = 'h';
    for (const auto& pr : h.resources) ids[pr.id] = 'r';
  }
  for (const auto& b : s.brokers) ids[b.id] = 'b';
  for (const auto& j : s.jobs) {
    ids[j.id] = 'j';
    for (const auto& p : j.processes) ids[p.id] = 'p';
  }

  auto expect = [&](const std::string& id, char kind, const std::string& code,
                    const std::string& what) {
    auto it = ids.find(id);
    if (it == ids.end() || it->second != kind) {
      out.push_back(ValidationIssue{code, what + " references undeclared id '" + id + "'"});
    }
  };

  for (const auto& u : s.users) {
    for (const auto& h : u.can_login) expect(h, 'h', "USER_UNKNOWN_HOST", "user " + u.id);
    for (const auto& r : u.can_use) expect(r, 'r', "USER_UNKNOWN_RESOURCE", "user " + u.id);
    for (const auto& [h, local] : u.local_ids) {
      expect(h, 'h', "USER_UNKNOWN_HOST", "user " + u.id);
      if (std::find(u.can_login.begin(), u.can_login.end(), h) == u.can_login.end()) {
        out.push_back(ValidationIssue{"USER_LOCAL_NOT_LOGGABLE",
                                      "user " + u.id + ": local account on " + h +
                                          " without can_login (" + local + ")"});
      }
    }
  }
  for (const auto& b : s.brokers) {
    for (const auto& h : b.hosts) expect(h, 'h', "BROKER_UNKNOWN_HOST", "broker " + b.id);
    if (!b.perf.dynamic && b.perf.value < 0.0) {
      out.push_back(ValidationIssue{"BROKER_PERF_NEGATIVE",
                                    "broker " + b.id + ": static perf must be >= 0"});
    }
  }
  for (const auto& j : s.jobs) {
    expect(j.user, 'u', "JOB_UNKNOWN_USER", "job " + j.id);
    if (j.manual_host) expect(*j.manual_host, 'h', "JOB_UNKNOWN_HOST", "job " + j.id);
  }
  for (const auto& f : s.faults) {
    expect(f.process, 'p', "FAULT_UNKNOWN_PROCESS", "fault");
  }
}

}  // namespace

std::vector<ValidationIssue> validate_scenario(const Scenario& s) {
  std::vector<ValidationIssue> out;

  for (const auto& j : s.jobs) {
    if (j.processes.empty()) {
      out.push_back(ValidationIssue{"JOB_NO_PROCESS", "job " + j.id + " declares no process"});
    }
    for (const auto& p : j.processes) {
      if (p.needs.empty()) {
        out.push_back(ValidationIssue{"PROC_NO_REQUEST",
                                      "process " + p.id + " requests no abstract resource"});
      }
    }
    if (j.policy) {
      bool found = std::any_of(s.policies.begin(), s.policies.end(),
                               [&](const RankPolicyDecl& p) { return p.name == *j.policy; });
      if (!found) {
        out.push_back(ValidationIssue{"POLICY_UNDECLARED",
                                      "job " + j.id + " requires undeclared policy '" +
                                          *j.policy + "'"});
      }
    }
    if (s.config.mode == SimMode::local && !j.manual_host) {
      out.push_back(ValidationIssue{"LOCAL_MODE_NO_HOST",
                                    "local mode requires 'host =' for job " + j.id});
    }
    if (s.config.mode != SimMode::local && j.manual_host) {
      out.push_back(ValidationIssue{"MANUAL_HOST_NOT_LOCAL",
                                    "job " + j.id + ": 'host =' is only valid in local mode"});
    }
  }

  for (const auto& u : s.users) {
    if (u.can_use.empty()) {
      out.push_back(ValidationIssue{"USER_NO_RESOURCE",
                                    "user " + u.id + " can use no physical resource"});
    }
  }

  for (const auto& h : s.hosts) {
    if (h.resources.empty()) {
      out.push_back(ValidationIssue{"HOST_NO_RESOURCE", "host " + h.id + " has no resource"});
    }
    for (const auto& pr : h.resources) {
      if (pr.attr.kind == AttrKind::capacity && pr.attr.amount < 0.0) {
        out.push_back(ValidationIssue{"RESOURCE_NEGATIVE_CAPACITY",
                                      "resource " + pr.id + " has negative capacity"});
      }
    }
  }

  for (const auto& p : s.policies) {
    bool nonzero = false;
    for (const auto& [key, w] : p.weights) {
      if (w < 0.0) {
        out.push_back(ValidationIssue{"POLICY_NEGATIVE_WEIGHT",
                                      "policy " + p.name + ": weight " + key + " < 0"});
      }
      if (w != 0.0) nonzero = true;
    }
    if (!nonzero) {
      out.push_back(ValidationIssue{"POLICY_NO_WEIGHT",
                                    "policy " + p.name + " needs at least one nonzero weight"});
    }
  }

  for (std::size_t i = 0; i < s.faults.size(); ++i) {
    for (std::size_t k = i + 1; k < s.faults.size(); ++k) {
      if (s.faults[i].process == s.faults[k].process && s.faults[i].at == s.faults[k].at &&
          s.faults[i].kind != s.faults[k].kind) {
        out.push_back(ValidationIssue{"FAULT_CONFLICT",
                                      "conflicting faults on process " + s.faults[i].process +
                                          " at step " + std::to_string(s.faults[i].at)});
      }
    }
  }

  validate_refs(s, out);
  return out;
}

namespace {

std::string attr_need_text(const Attr& a) {
  if (a.kind == AttrKind::keyword) return a.key + "=" + a.keyword;
  return a.key + ">=" + format_real(a.amount) + " unit=" + a.unit;
}

}  // namespace

std::string serialize_scenario(const Scenario& s) {
  std::ostringstream os;
  for (const auto& u : s.users) {
    os << "[user " << u.id << "]\n";
    if (!u.can_login.empty()) {
      os << "can_login =";
      for (const auto& h : u.can_login) os << " " << h;
      os << "\n";
    }
    if (!u.can_use.empty()) {
      os << "can_use =";
      for (const auto& r : u.can_use) os << " " << r;
      os << "\n";
    }
    for (const auto& [h, local] : u.local_ids) os << "local " << h << " = " << local << "\n";
    os << "\n";
  }
  for (const auto& h : s.hosts) {
    os << "[host " << h.id << "]\n";
    for (const auto& pr : h.resources) {
      os << "resource " << pr.id << " key=" << pr.attr.key;
      if (pr.attr.kind == AttrKind::keyword) {
        os << " keyword=" << pr.attr.keyword;
      } else {
        os << " capacity=" << format_real(pr.attr.amount) << " unit=" << pr.attr.unit;
      }
      os << " type=" << (pr.type == ResourceType::direct ? "direct" : "handled") << "\n";
    }
    os << "\n";
  }
  for (const auto& b : s.brokers) {
    os << "[broker " << b.id << "]\n";
    for (const auto& p : b.properties) os << "property " << p.key << "=" << p.keyword << "\n";
    if (!b.hosts.empty()) {
      os << "hosts =";
      for (const auto& h : b.hosts) os << " " << h;
      os << "\n";
    }
    if (b.perf.dynamic) {
      os << "perf = dynamic\n";
    } else {
      os << "perf = " << format_real(b.perf.value) << "\n";
    }
    os << "\n";
  }
  for (const auto& p : s.policies) {
    os << "[policy " << p.name << "]\n";
    for (const auto& [key, w] : p.weights) os << "weight " << key << " = " << format_real(w) << "\n";
    os << "\n";
  }
  for (const auto& j : s.jobs) {
    os << "[job " << j.id << "]\n";
    os << "user = " << j.user << "\n";
    if (j.manual_host) os << "host = " << *j.manual_host << "\n";
    for (const auto& r : j.broker_requirements) {
      os << "require broker " << r.key << "=" << r.keyword << "\n";
    }
    if (j.policy) os << "require policy " << *j.policy << "\n";
    for (const auto& p : j.processes) {
      for (const auto& need : p.needs) {
        os << "process " << p.id << " needs " << attr_need_text(need) << "\n";
      }
    }
    os << "\n";
  }
  if (!s.faults.empty()) {
    os << "[fault]\n";
    for (const auto& f : s.faults) {
      os << (f.kind == FaultKind::abort_task ? "abort" : "terminate") << " process=" << f.process
         << " at=" << f.at << "\n";
    }
    os << "\n";
  }
  os << "[config]\n";
  os << "choose = " << (s.config.choose.mode == ChooseMode::seeded ? "seeded" : "lowest-id")
     << "\n";
  os << "seed = " << s.config.choose.seed << "\n";
  os << "mode = " << to_string(s.config.mode) << "\n";
  os << "matchmaking = " << to_string(s.config.matchmaking) << "\n";
  os << "stall_limit = " << s.config.stall_limit << "\n";
  os << "max_steps = " << s.config.max_steps << "\n";
  return os.str();
}

}  // namespace gridsim
