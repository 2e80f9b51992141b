#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "unitlab/cdcl.hpp"
#include "unitlab/cnf.hpp"

namespace unitlab {

enum class Backend { Embedded, External, Portfolio };

struct SolverConfig {
  Backend backend = Backend::Embedded;
  // External solver binary; empty means $UNITLAB_SOLVER, then "kissat" on PATH.
  std::string external_path;
  SolveLimits limits;
};

// $UNITLAB_SOLVER if set, else `configured`, else "kissat".
std::string resolve_solver_path(const std::string& configured);

struct SolveResult {
  SolveStatus status = SolveStatus::Timeout;
  std::optional<Model> model;
  SolveStats stats;
  std::string backend;  // which backend produced the answer
};

// Solves the instance; a returned model has been checked against every clause.
SolveResult solve(const CnfInstance& c, const SolverConfig& config = {});

struct EnumerateResult {
  // True variables of the projection per model, sorted canonically.
  std::vector<std::vector<int>> models;
  bool complete = false;  // false: a call hit its limit; list is truncated
  std::size_t solver_calls = 0;
  double seconds = 0.0;
};

// All assignments to `projection` extendable to a model, found by blocking
// each projected model and re-solving. Limits apply per call. `on_model` is
// called for each model as it is found (before sorting).
EnumerateResult enumerate_all(const CnfInstance& c, const std::vector<int>& projection,
                              const SolverConfig& config = {},
                              const std::function<void(const Model&)>& on_model = {});

std::string to_string(SolveStatus s);
std::string to_string(Backend b);

}  // namespace unitlab
