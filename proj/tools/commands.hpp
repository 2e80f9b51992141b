#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace unitlab::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kRefuted = 1;  // refuted, or unsat while searching
inline constexpr int kUsage = 2;
inline constexpr int kTimeout = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string group = "P";
  int radius = -1;
  std::string generators;  // comma-separated symbols; empty = group default
  std::string solver = "embedded";
  std::string solver_path;
  bool two_sided = false;
  bool swap = false;
  bool json = false;
  double limit_seconds = 3600.0;
  std::uint64_t seed = 0;
  std::string out, file, word;
  int n = 0, r = 0;
  std::size_t budget = 200000;
  std::string kind = "unit";   // encode
  std::string automorphisms = "S";  // orbits
};

struct CommandResult {
  int exit_code = kOk;
  nlohmann::json data;  // printed with --json
  std::string text;     // printed otherwise
};

// Runs one subcommand. Throws UsageError (and std::invalid_argument,
// ParseError) for bad input.
CommandResult run_command(const std::string& name, const Options& o);

}  // namespace unitlab::cli
