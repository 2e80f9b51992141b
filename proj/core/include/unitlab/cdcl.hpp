#pragma once

#include <atomic>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <memory>
#include <span>
#include <vector>

namespace unitlab {

enum class SolveStatus { Sat, Unsat, Timeout };

struct SolveLimits {
  std::uint64_t max_conflicts = 10'000'000;
  double max_seconds = 3600.0;
  const std::atomic<bool>* stop = nullptr;  // polled; true aborts with Timeout
  std::uint64_t seed = 0;
};

struct SolveStats {
  std::uint64_t conflicts = 0, decisions = 0, propagations = 0, restarts = 0, learnt_literals = 0;
  double seconds = 0.0;
};

// Conflict-driven clause-learning solver: two watched literals with blocking
// literals, first-UIP learning with recursive minimisation, VSIDS branching,
// phase saving, LBD-based clause database reduction, and alternating
// glucose-style / Luby restarts. Clauses may be added between solve() calls.
class CdclSolver {
 public:
  explicit CdclSolver(int num_vars = 0, std::uint64_t seed = 0);
  ~CdclSolver();
  CdclSolver(const CdclSolver&) = delete;
  CdclSolver& operator=(const CdclSolver&) = delete;

  int num_vars() const;
  int new_var();
  // DIMACS literals. Returns false once the formula is known unsatisfiable.
  bool add_clause(std::span<const int> lits);
  bool add_clause(std::initializer_list<int> lits) { return add_clause(std::span<const int>(lits.begin(), lits.size())); }

  SolveStatus solve(const SolveLimits& limits = {});
  // Value of variable v (1-based) in the last model.
  bool model_value(int v) const;
  // Model indexed by variable id, index 0 unused.
  std::vector<bool> model() const;
  const SolveStats& stats() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace unitlab
