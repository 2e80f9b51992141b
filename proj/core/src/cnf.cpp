#include "unitlab/cnf.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <istream>
#include <bit>
#include "json.hpp"
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace unitlab {

namespace {

constexpr std::array<std::pair<VarRole, std::string_view>, 12> kRoleNames{{
    {VarRole::U, "u"},
    {VarRole::V, "v"},
    {VarRole::A, "a"},
    {VarRole::B, "b"},
    {VarRole::C, "c"},
    {VarRole::Alpha, "alpha"},
    {VarRole::Beta, "beta"},
    {VarRole::AlphaPrime, "alpha'"},
    {VarRole::BetaPrime, "beta'"},
    {VarRole::And, "and"},
    {VarRole::Parity, "xor"},
    {VarRole::Count, "count"},
}};

}  // namespace

std::string_view to_string(VarRole r) {
  for (const auto& [role, name] : kRoleNames) {
    if (role == r) return name;
  }
  return "?";
}

std::optional<VarRole> parse_var_role(std::string_view s) {
  for (const auto& [role, name] : kRoleNames) {
    if (name == s) return role;
  }
  return std::nullopt;
}

int CnfInstance::new_var(VarRole role, std::int64_t i, std::int64_t j) {
  vars_.push_back({role, i, j});
  return num_vars();
}

void CnfInstance::add_clause(std::vector<int> lits) {
  for (int l : lits) {
    if (l == 0 || std::abs(l) > num_vars()) throw std::invalid_argument("literal references undeclared variable");
  }
  clauses_.push_back(std::move(lits));
}

std::vector<int> CnfInstance::vars_with_role(std::initializer_list<VarRole> roles) const {
  std::vector<int> out;
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    if (std::find(roles.begin(), roles.end(), vars_[k].role) != roles.end()) out.push_back(static_cast<int>(k) + 1);
  }
  return out;
}

int CnfInstance::add_and(int x, int y) {
  if (x == y) return x;
  if (x > y) std::swap(x, y);
  auto [it, fresh] = and_cache_.try_emplace({x, y}, 0);
  if (!fresh) return it->second;
  const int p = new_var(VarRole::And, x, y);
  it->second = p;
  add_clause({-p, x});
  add_clause({-p, y});
  add_clause({p, -x, -y});
  return p;
}

void CnfInstance::add_xor_small(const std::vector<int>& vars, bool rhs) {
  const std::size_t k = vars.size();
  // Exclude every assignment whose parity differs from rhs.
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    if ((std::popcount(mask) % 2 == 1) == rhs) continue;
    std::vector<int> clause;
    for (std::size_t b = 0; b < k; ++b) clause.push_back((mask >> b) & 1u ? -vars[b] : vars[b]);
    add_clause(std::move(clause));
  }
}

void CnfInstance::add_parity(std::vector<int> vars, bool rhs) {
  std::sort(vars.begin(), vars.end());
  std::vector<int> odd;
  for (std::size_t i = 0; i < vars.size();) {
    std::size_t j = i;
    while (j < vars.size() && vars[j] == vars[i]) ++j;
    if ((j - i) % 2 == 1) odd.push_back(vars[i]);
    i = j;
  }
  // Chain in chunks of three: carry = x1 ^ x2 ^ x3 replaces them.
  constexpr std::size_t kDirect = 4;
  std::size_t pos = 0;
  while (odd.size() - pos > kDirect) {
    const int carry = new_var(VarRole::Parity);
    add_xor_small({odd[pos], odd[pos + 1], odd[pos + 2], carry}, false);
    pos += 2;
    odd[pos] = carry;
  }
  const std::vector<int> rest(odd.begin() + static_cast<std::ptrdiff_t>(pos), odd.end());
  if (rest.empty()) {
    if (rhs) clauses_.push_back({});
    return;
  }
  add_xor_small(rest, rhs);
}

void CnfInstance::add_at_least_one(const std::vector<int>& vars) { add_clause(vars); }

void CnfInstance::add_at_least_two(const std::vector<int>& vars) {
  if (vars.size() < 2) {
    clauses_.push_back({});
    return;
  }
  // s_i: some of vars[0..i] is true. t_i: vars[i] and some earlier var are true.
  std::vector<int> s(vars.size() - 1), t;
  for (std::size_t i = 0; i + 1 < vars.size(); ++i) {
    s[i] = new_var(VarRole::Count);
    if (i == 0)
      add_clause({-s[0], vars[0]});
    else
      add_clause({-s[i], s[i - 1], vars[i]});
  }
  for (std::size_t i = 1; i < vars.size(); ++i) {
    const int ti = new_var(VarRole::Count);
    add_clause({-ti, vars[i]});
    add_clause({-ti, s[i - 1]});
    t.push_back(ti);
  }
  add_clause(t);
}

bool satisfies(const CnfInstance& c, const Model& m) {
  if (m.size() < static_cast<std::size_t>(c.num_vars()) + 1) return false;
  for (const auto& clause : c.clauses()) {
    bool ok = false;
    for (int l : clause) {
      if (m[static_cast<std::size_t>(std::abs(l))] == (l > 0)) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

std::vector<int> true_vars(const Model& m, const std::vector<int>& vars) {
  std::vector<int> out;
  for (int v : vars) {
    if (m.at(static_cast<std::size_t>(v))) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> decode_role(const CnfInstance& c, const Model& m, VarRole role) {
  std::vector<std::size_t> out;
  for (int v = 1; v <= c.num_vars(); ++v) {
    const auto& inf = c.info(v);
    if (inf.role == role && m.at(static_cast<std::size_t>(v))) out.push_back(static_cast<std::size_t>(inf.i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using nlohmann::json;

constexpr std::string_view kMetaTag = "c unitlab-meta ";
constexpr std::string_view kMapTag = "c unitlab-varmap ";
constexpr std::size_t kEntriesPerLine = 256;

// Runs of consecutive variables with equal role whose i increases by one and
// j is unused compress to [first, count, role, i0]; everything else is listed
// as [var, role, i, j].
void write_varmap(const CnfInstance& c, std::ostream& out) {
  json line = json::array();
  const auto flush = [&] {
    if (line.empty()) return;
    out << kMapTag << line.dump() << '\n';
    line = json::array();
  };
  const auto& v = c.var_infos();
  for (std::size_t k = 0; k < v.size();) {
    std::size_t e = k + 1;
    if (v[k].j == -1 && v[k].i >= 0) {
      while (e < v.size() && v[e].role == v[k].role && v[e].j == -1 && v[e].i == v[e - 1].i + 1) ++e;
    } else if (v[k].i == -1 && v[k].j == -1) {
      while (e < v.size() && v[e].role == v[k].role && v[e].i == -1 && v[e].j == -1) ++e;
    }
    if (e - k > 1) {
      line.push_back({{"first", k + 1}, {"count", e - k}, {"role", to_string(v[k].role)}, {"i0", v[k].i}});
    } else {
      line.push_back({{"var", k + 1}, {"role", to_string(v[k].role)}, {"i", v[k].i}, {"j", v[k].j}});
    }
    if (line.size() >= kEntriesPerLine) flush();
    k = e;
  }
  flush();
}

VarRole role_from_json(const json& j) {
  const auto r = parse_var_role(j.get<std::string>());
  if (!r) throw std::runtime_error("unknown variable role in DIMACS varmap");
  return *r;
}

}  // namespace

void write_dimacs(const CnfInstance& c, std::ostream& out) {
  json meta = json::object();
  for (const auto& [k, v] : c.meta) meta[k] = v;
  out << kMetaTag << meta.dump() << '\n';
  write_varmap(c, out);
  out << "p cnf " << c.num_vars() << ' ' << c.clauses().size() << '\n';
  for (const auto& clause : c.clauses()) {
    for (int l : clause) out << l << ' ';
    out << "0\n";
  }
}

std::string to_dimacs(const CnfInstance& c) {
  std::ostringstream ss;
  write_dimacs(c, ss);
  return ss.str();
}

CnfInstance read_dimacs(std::istream& in) {
  CnfInstance c;
  std::vector<VarInfo> infos;
  std::string line;
  long declared_vars = -1, declared_clauses = -1;
  std::vector<std::vector<int>> clauses;
  std::vector<int> current;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(kMetaTag, 0) == 0) {
      const json meta = json::parse(line.substr(kMetaTag.size()));
      for (const auto& [k, v] : meta.items()) c.meta[k] = v.get<std::string>();
      continue;
    }
    if (line.rfind(kMapTag, 0) == 0) {
      const json entries = json::parse(line.substr(kMapTag.size()));
      for (const auto& e : entries) {
        if (e.contains("first")) {
          const auto first = e["first"].get<std::size_t>(), count = e["count"].get<std::size_t>();
          const auto i0 = e["i0"].get<std::int64_t>();
          if (infos.size() < first - 1 + count) infos.resize(first - 1 + count);
          for (std::size_t k = 0; k < count; ++k)
            infos[first - 1 + k] = {role_from_json(e["role"]), i0 < 0 ? -1 : i0 + static_cast<std::int64_t>(k), -1};
        } else {
          const auto var = e["var"].get<std::size_t>();
          if (infos.size() < var) infos.resize(var);
          infos[var - 1] = {role_from_json(e["role"]), e["i"].get<std::int64_t>(), e["j"].get<std::int64_t>()};
        }
      }
      continue;
    }
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      ls >> p >> fmt >> declared_vars >> declared_clauses;
      if (fmt != "cnf" || !ls) throw std::runtime_error("malformed DIMACS header");
      continue;
    }
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        clauses.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
  }
  if (declared_vars < 0) throw std::runtime_error("missing DIMACS header");
  if (!current.empty()) throw std::runtime_error("unterminated DIMACS clause");
  if (static_cast<long>(clauses.size()) != declared_clauses) throw std::runtime_error("DIMACS clause count mismatch");
  infos.resize(static_cast<std::size_t>(declared_vars));
  c.set_var_infos(std::move(infos));
  for (auto& cl : clauses) c.add_clause(std::move(cl));
  return c;
}

CnfInstance parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_dimacs(in);
}

ParsedModel parse_model(std::string_view text, int num_vars) {
  ParsedModel out;
  out.model.assign(static_cast<std::size_t>(num_vars) + 1, false);
  bool terminated = false;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("s ", 0) == 0) {
      const std::string s = line.substr(2);
      if (s == "SATISFIABLE")
        out.status = ModelStatus::Sat;
      else if (s == "UNSATISFIABLE")
        out.status = ModelStatus::Unsat;
      else if (s == "UNKNOWN")
        out.status = ModelStatus::Unknown;
      else
        throw std::runtime_error("malformed status line: " + line);
      continue;
    }
    if (line.rfind("v", 0) != 0) continue;
    std::istringstream ls(line.substr(1));
    std::string tok;
    while (ls >> tok) {
      char* end = nullptr;
      const long lit = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0') throw std::runtime_error("malformed literal in model: " + tok);
      if (lit == 0) {
        terminated = true;
        continue;
      }
      if (std::labs(lit) > num_vars) throw std::runtime_error("model literal out of range: " + tok);
      out.model[static_cast<std::size_t>(std::labs(lit))] = lit > 0;
    }
  }
  if (out.status == ModelStatus::Sat && !terminated) throw std::runtime_error("model not terminated by 0");
  if (out.status != ModelStatus::Sat) out.model.clear();
  return out;
}

}  // namespace unitlab
