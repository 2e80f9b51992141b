#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace unitlab {

// What a SAT variable stands for. Coefficient roles carry the index of the
// element in the encoder's domain in `i`; product auxiliaries carry both
// operand variables in (i, j).
enum class VarRole : std::uint8_t {
  U,           // coefficient of u
  V,           // coefficient of v
  A,           // membership in A (UPP)
  B,           // membership in B (UPP)
  C,           // c_{s,t} <-> a_s and b_t (UPP), i, j = domain indices
  Alpha,       // split encoding, u = alpha + r beta
  Beta,
  AlphaPrime,  // v = alpha' + r beta'
  BetaPrime,
  And,         // product auxiliary, i and j are the operand variables
  Parity,      // XOR-chain carry
  Count,       // cardinality-constraint auxiliary
};

std::string_view to_string(VarRole r);
std::optional<VarRole> parse_var_role(std::string_view s);

struct VarInfo {
  VarRole role = VarRole::Parity;
  std::int64_t i = -1, j = -1;
  bool operator==(const VarInfo&) const = default;
};

// CNF formula with DIMACS-style literals (+v / -v, v >= 1) and a role map.
class CnfInstance {
 public:
  int num_vars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::vector<int>>& clauses() const { return clauses_; }
  const VarInfo& info(int var) const { return vars_.at(static_cast<std::size_t>(var - 1)); }
  const std::vector<VarInfo>& var_infos() const { return vars_; }

  int new_var(VarRole role, std::int64_t i = -1, std::int64_t j = -1);
  void add_clause(std::vector<int> lits);
  // Variables carrying any of the given roles, in increasing id order.
  std::vector<int> vars_with_role(std::initializer_list<VarRole> roles) const;

  // Free-form key/value metadata: group, radius, kind, ...
  std::map<std::string, std::string> meta;

  // Tseitin helpers.
  // Fresh or cached variable p <-> x and y.
  int add_and(int x, int y);
  // XOR of the given variables equals rhs. Repeated variables cancel.
  void add_parity(std::vector<int> vars, bool rhs);
  void add_at_least_one(const std::vector<int>& vars);
  void add_at_least_two(const std::vector<int>& vars);

  bool operator==(const CnfInstance& o) const { return vars_ == o.vars_ && clauses_ == o.clauses_ && meta == o.meta; }

  // Used by the DIMACS reader.
  void set_var_infos(std::vector<VarInfo> infos) { vars_ = std::move(infos); }

 private:
  void add_xor_small(const std::vector<int>& vars, bool rhs);

  std::vector<VarInfo> vars_;
  std::vector<std::vector<int>> clauses_;
  std::map<std::pair<int, int>, int> and_cache_;
};

// Assignment indexed by variable id (index 0 unused).
using Model = std::vector<bool>;

bool satisfies(const CnfInstance& c, const Model& m);
// True variables among `vars`.
std::vector<int> true_vars(const Model& m, const std::vector<int>& vars);
// Domain indices (VarInfo::i) of true variables with the given role.
std::vector<std::size_t> decode_role(const CnfInstance& c, const Model& m, VarRole role);

// DIMACS with `c unitlab-meta` and `c unitlab-varmap` JSON comment lines.
void write_dimacs(const CnfInstance& c, std::ostream& out);
std::string to_dimacs(const CnfInstance& c);
CnfInstance read_dimacs(std::istream& in);
CnfInstance parse_dimacs(std::string_view text);

enum class ModelStatus { Sat, Unsat, Unknown };

struct ParsedModel {
  ModelStatus status = ModelStatus::Unknown;
  Model model;  // only for Sat
};

// Parses solver output: an `s` line and `v` lines terminated by literal 0.
ParsedModel parse_model(std::string_view text, int num_vars);

}  // namespace unitlab
