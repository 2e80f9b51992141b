#include "unitlab/solve.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <thread>

namespace unitlab {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Sat:
      return "sat";
    case SolveStatus::Unsat:
      return "unsat";
    case SolveStatus::Timeout:
      return "timeout";
  }
  return "?";
}

std::string to_string(Backend b) {
  switch (b) {
    case Backend::Embedded:
      return "embedded";
    case Backend::External:
      return "external";
    case Backend::Portfolio:
      return "portfolio";
  }
  return "?";
}

std::string resolve_solver_path(const std::string& configured) {
  if (const char* env = std::getenv("UNITLAB_SOLVER"); env && *env) return env;
  return configured.empty() ? "kissat" : configured;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

SolveResult solve_embedded(const CnfInstance& c, const SolveLimits& limits) {
  CdclSolver s(c.num_vars(), limits.seed);
  for (const auto& cl : c.clauses()) s.add_clause(cl);
  SolveResult r;
  r.backend = "embedded";
  r.status = s.solve(limits);
  r.stats = s.stats();
  if (r.status == SolveStatus::Sat) r.model = s.model();
  return r;
}

class TempFile {
 public:
  TempFile() {
    std::string templ = (std::filesystem::temp_directory_path() / "unitlab-XXXXXX.cnf").string();
    const int fd = mkstemps(templ.data(), 4);
    if (fd < 0) throw std::runtime_error("cannot create temporary DIMACS file");
    ::close(fd);
    path_ = templ;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct ProcessOutput {
  int exit_code = -1;
  bool killed = false;
  std::string out;
};

// Runs argv with stdout captured, killing it when the deadline passes or the
// stop flag is raised.
ProcessOutput run_process(const std::vector<std::string>& argv, const SolveLimits& limits) {
  int pipefd[2];
  if (::pipe(pipefd) != 0) throw std::runtime_error("pipe failed");
  const pid_t pid = ::fork();
  if (pid < 0) throw std::runtime_error("fork failed");
  if (pid == 0) {
    ::dup2(pipefd[1], STDOUT_FILENO);
    const int devnull = ::open("/dev/null", O_WRONLY);
    if (devnull >= 0) ::dup2(devnull, STDERR_FILENO);
    ::close(pipefd[0]);
    ::close(pipefd[1]);
    std::vector<char*> args;
    for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
    args.push_back(nullptr);
    ::execvp(args[0], args.data());
    ::_exit(127);
  }
  ::close(pipefd[1]);
  ProcessOutput po;
  const auto start = Clock::now();
  char buf[65536];
  for (;;) {
    pollfd pfd{pipefd[0], POLLIN, 0};
    const int rc = ::poll(&pfd, 1, 100);
    if (rc > 0) {
      const ssize_t n = ::read(pipefd[0], buf, sizeof buf);
      if (n > 0) {
        po.out.append(buf, static_cast<std::size_t>(n));
        continue;
      }
      if (n == 0) break;
      if (errno != EINTR) break;
    }
    const bool stop = limits.stop && limits.stop->load(std::memory_order_relaxed);
    if (!po.killed && (stop || seconds_since(start) > limits.max_seconds)) {
      ::kill(pid, SIGKILL);
      po.killed = true;
    }
  }
  ::close(pipefd[0]);
  int status = 0;
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  if (WIFEXITED(status)) po.exit_code = WEXITSTATUS(status);
  return po;
}

SolveResult solve_external_file(const std::string& dimacs_path, int num_vars, const std::string& solver,
                                const SolveLimits& limits) {
  const auto start = Clock::now();
  const ProcessOutput po = run_process({solver, dimacs_path}, limits);
  SolveResult r;
  r.backend = "external";
  r.stats.seconds = seconds_since(start);
  if (po.killed) {
    r.status = SolveStatus::Timeout;
    return r;
  }
  if (po.exit_code == 127) throw std::runtime_error("cannot execute external solver '" + solver + "'");
  const ParsedModel pm = parse_model(po.out, num_vars);
  if (pm.status == ModelStatus::Unknown) {
    if (po.exit_code != 0 && po.exit_code != 10 && po.exit_code != 20)
      throw std::runtime_error("external solver exited with code " + std::to_string(po.exit_code) +
                               " without a status line");
    r.status = SolveStatus::Timeout;
    return r;
  }
  if ((pm.status == ModelStatus::Sat && po.exit_code != 10 && po.exit_code != 0) ||
      (pm.status == ModelStatus::Unsat && po.exit_code != 20 && po.exit_code != 0))
    throw std::runtime_error("external solver exit code " + std::to_string(po.exit_code) +
                             " contradicts its status line");
  r.status = pm.status == ModelStatus::Sat ? SolveStatus::Sat : SolveStatus::Unsat;
  if (r.status == SolveStatus::Sat) r.model = pm.model;
  return r;
}

SolveResult solve_external(const CnfInstance& c, const SolverConfig& config) {
  TempFile tmp;
  {
    std::ofstream out(tmp.path());
    write_dimacs(c, out);
  }
  return solve_external_file(tmp.path(), c.num_vars(), resolve_solver_path(config.external_path), config.limits);
}

SolveResult solve_portfolio(const CnfInstance& c, const SolverConfig& config) {
  std::atomic<bool> stop{false};
  SolverConfig local = config;
  local.limits.stop = &stop;
  const std::atomic<bool>* outer = config.limits.stop;
  SolveResult embedded, external;
  std::exception_ptr external_error;
  std::thread watcher_thread;
  std::atomic<bool> done{false};
  if (outer) {
    watcher_thread = std::thread([&] {
      while (!done.load()) {
        if (outer->load()) stop.store(true);
        std::this_thread::sleep_for(std::chrono::milliseconds(50));
      }
    });
  }
  std::thread ext([&] {
    try {
      external = solve_external(c, local);
    } catch (...) {
      external_error = std::current_exception();
    }
    if (!external_error && external.status != SolveStatus::Timeout) stop.store(true);
  });
  embedded = solve_embedded(c, local.limits);
  if (embedded.status != SolveStatus::Timeout) stop.store(true);
  ext.join();
  done.store(true);
  if (watcher_thread.joinable()) watcher_thread.join();
  const bool ext_ok = !external_error && external.status != SolveStatus::Timeout;
  if (embedded.status != SolveStatus::Timeout && ext_ok && embedded.status != external.status)
    throw std::logic_error("portfolio backends disagree on satisfiability");
  // Prefer the embedded answer when both finished so results do not depend
  // on thread timing more than necessary.
  if (embedded.status != SolveStatus::Timeout) return embedded;
  if (ext_ok) return external;
  return embedded;
}

}  // namespace

SolveResult solve(const CnfInstance& c, const SolverConfig& config) {
  SolveResult r;
  switch (config.backend) {
    case Backend::Embedded:
      r = solve_embedded(c, config.limits);
      break;
    case Backend::External:
      r = solve_external(c, config);
      break;
    case Backend::Portfolio:
      r = solve_portfolio(c, config);
      break;
  }
  if (r.model && !satisfies(c, *r.model)) throw std::runtime_error(r.backend + " solver returned an invalid model");
  return r;
}

EnumerateResult enumerate_all(const CnfInstance& c, const std::vector<int>& projection, const SolverConfig& config,
                              const std::function<void(const Model&)>& on_model) {
  EnumerateResult res;
  const auto start = Clock::now();
  const auto record = [&](const Model& m) -> std::vector<int> {
    if (!satisfies(c, m)) throw std::runtime_error("solver returned an invalid model");
    if (on_model) on_model(m);
    res.models.push_back(true_vars(m, projection));
    std::vector<int> block;
    for (int v : projection) block.push_back(m[static_cast<std::size_t>(v)] ? -v : v);
    return block;
  };

  if (config.backend == Backend::Embedded) {
    CdclSolver s(c.num_vars(), config.limits.seed);
    for (const auto& cl : c.clauses()) s.add_clause(cl);
    for (;;) {
      ++res.solver_calls;
      const SolveStatus st = s.solve(config.limits);
      if (st == SolveStatus::Timeout) break;
      if (st == SolveStatus::Unsat) {
        res.complete = true;
        break;
      }
      s.add_clause(record(s.model()));
    }
  } else {
    // Re-solve an incrementally grown copy (external solvers have no
    // incremental interface).
    CnfInstance grown = c;
    for (;;) {
      ++res.solver_calls;
      const SolveResult r = solve(grown, config);
      if (r.status == SolveStatus::Timeout) break;
      if (r.status == SolveStatus::Unsat) {
        res.complete = true;
        break;
      }
      grown.add_clause(record(*r.model));
    }
  }
  std::sort(res.models.begin(), res.models.end());
  res.seconds = seconds_since(start);
  return res;
}

}  // namespace unitlab
