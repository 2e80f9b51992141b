#include "unitlab/cdcl.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>

namespace unitlab {

namespace {

using Lit = std::uint32_t;  // 2 * var + negated
using CRef = std::uint32_t;
constexpr CRef kNoReason = ~CRef{0};
constexpr Lit kNoLit = ~Lit{0};

inline Lit make_lit(std::uint32_t var, bool neg) { return 2 * var + (neg ? 1u : 0u); }
inline std::uint32_t var_of(Lit l) { return l >> 1; }
inline bool sign_of(Lit l) { return l & 1u; }
inline Lit neg(Lit l) { return l ^ 1u; }

Lit from_dimacs(int l) { return make_lit(static_cast<std::uint32_t>(std::abs(l) - 1), l < 0); }

// Values: 1 true, -1 false, 0 unassigned.
using LBool = std::int8_t;

double luby(double y, std::uint64_t x) {
  std::uint64_t size = 1, seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  return std::pow(y, static_cast<double>(seq));
}

class VarHeap {
 public:
  explicit VarHeap(const std::vector<double>& act) : act_(act) {}

  bool empty() const { return heap_.empty(); }
  bool contains(std::uint32_t v) const { return v < pos_.size() && pos_[v] >= 0; }
  void grow(std::size_t n) { pos_.resize(n, -1); }

  void insert(std::uint32_t v) {
    if (contains(v)) return;
    pos_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    up(heap_.size() - 1);
  }
  void increased(std::uint32_t v) {
    if (contains(v)) up(static_cast<std::size_t>(pos_[v]));
  }
  std::uint32_t pop() {
    const std::uint32_t top = heap_.front();
    heap_.front() = heap_.back();
    pos_[heap_.front()] = 0;
    heap_.pop_back();
    pos_[top] = -1;
    if (!heap_.empty()) down(0);
    return top;
  }

 private:
  bool less(std::uint32_t a, std::uint32_t b) const { return act_[a] > act_[b]; }
  void up(std::size_t i) {
    const std::uint32_t v = heap_[i];
    while (i > 0) {
      const std::size_t p = (i - 1) / 2;
      if (!less(v, heap_[p])) break;
      heap_[i] = heap_[p];
      pos_[heap_[i]] = static_cast<int>(i);
      i = p;
    }
    heap_[i] = v;
    pos_[v] = static_cast<int>(i);
  }
  void down(std::size_t i) {
    const std::uint32_t v = heap_[i];
    for (;;) {
      std::size_t c = 2 * i + 1;
      if (c >= heap_.size()) break;
      if (c + 1 < heap_.size() && less(heap_[c + 1], heap_[c])) ++c;
      if (!less(heap_[c], v)) break;
      heap_[i] = heap_[c];
      pos_[heap_[i]] = static_cast<int>(i);
      i = c;
    }
    heap_[i] = v;
    pos_[v] = static_cast<int>(i);
  }

  const std::vector<double>& act_;
  std::vector<std::uint32_t> heap_;
  std::vector<int> pos_;
};

struct Watch {
  CRef cref;
  Lit blocker;
};

}  // namespace

struct CdclSolver::Impl {
  // Clause arena: [size][flags | lbd << 2][activity bits] lits...
  std::vector<std::uint32_t> mem;
  std::vector<CRef> originals, learnts;
  std::vector<std::vector<int>> original_lits;  // for the model self-check

  std::vector<std::vector<Watch>> watches;
  std::vector<LBool> assigns;
  std::vector<int> level;
  std::vector<CRef> reason;
  std::vector<bool> phase;
  std::vector<double> activity;
  VarHeap heap{activity};
  std::vector<Lit> trail;
  std::vector<std::size_t> trail_lim;
  std::size_t qhead = 0;

  std::vector<std::uint8_t> seen;
  std::vector<Lit> analyze_stack, analyze_toclear;
  std::vector<std::uint64_t> level_stamp;
  std::uint64_t stamp = 0;

  double var_inc = 1.0, var_decay = 0.95;
  float cla_inc = 1.0f;
  bool ok = true;

  std::vector<bool> model;
  SolveStats stats;
  std::mt19937_64 rng;

  // Restart state.
  double lbd_fast = 0.0, lbd_slow = 0.0;
  bool stable = false;
  std::uint64_t mode_switch_at = 2000, mode_length = 2000;
  std::uint64_t luby_index = 0, luby_budget = 0, conflicts_since_restart = 0;
  std::uint64_t next_reduce = 2000, reduces = 0;

  explicit Impl(std::uint64_t seed) : rng(seed) {}

  // --- clause storage -----------------------------------------------------
  std::uint32_t csize(CRef c) const { return mem[c]; }
  Lit* clits(CRef c) { return &mem[c + 3]; }
  bool learnt(CRef c) const { return mem[c + 1] & 1u; }
  bool deleted(CRef c) const { return mem[c + 1] & 2u; }
  std::uint32_t lbd(CRef c) const { return mem[c + 1] >> 2; }
  void set_lbd(CRef c, std::uint32_t l) { mem[c + 1] = (mem[c + 1] & 3u) | (l << 2); }
  float cact(CRef c) const { return std::bit_cast<float>(mem[c + 2]); }
  void set_cact(CRef c, float a) { mem[c + 2] = std::bit_cast<std::uint32_t>(a); }

  CRef alloc(const std::vector<Lit>& lits, bool is_learnt, std::uint32_t l) {
    const CRef c = static_cast<CRef>(mem.size());
    mem.push_back(static_cast<std::uint32_t>(lits.size()));
    mem.push_back((is_learnt ? 1u : 0u) | (l << 2));
    mem.push_back(std::bit_cast<std::uint32_t>(0.0f));
    mem.insert(mem.end(), lits.begin(), lits.end());
    return c;
  }

  void attach(CRef c) {
    Lit* l = clits(c);
    watches[l[0]].push_back({c, l[1]});
    watches[l[1]].push_back({c, l[0]});
  }

  // --- assignment ---------------------------------------------------------
  LBool value(Lit l) const {
    const LBool v = assigns[var_of(l)];
    return sign_of(l) ? static_cast<LBool>(-v) : v;
  }
  int decision_level() const { return static_cast<int>(trail_lim.size()); }

  void enqueue(Lit l, CRef from) {
    const auto v = var_of(l);
    assigns[v] = sign_of(l) ? -1 : 1;
    level[v] = decision_level();
    reason[v] = from;
    trail.push_back(l);
  }

  void cancel_until(int lvl) {
    if (decision_level() <= lvl) return;
    for (std::size_t i = trail.size(); i-- > trail_lim[static_cast<std::size_t>(lvl)];) {
      const auto v = var_of(trail[i]);
      assigns[v] = 0;
      reason[v] = kNoReason;
      phase[v] = sign_of(trail[i]);
      heap.insert(v);
    }
    trail.resize(trail_lim[static_cast<std::size_t>(lvl)]);
    trail_lim.resize(static_cast<std::size_t>(lvl));
    qhead = trail.size();
  }

  int add_var() {
    const auto v = static_cast<std::uint32_t>(assigns.size());
    assigns.push_back(0);
    level.push_back(0);
    reason.push_back(kNoReason);
    phase.push_back(true);  // negative literal first: sparse supports
    activity.push_back(std::uniform_real_distribution<double>(0.0, 1e-5)(rng));
    seen.push_back(0);
    level_stamp.push_back(0);
    watches.resize(2 * assigns.size());
    heap.grow(assigns.size());
    heap.insert(v);
    return static_cast<int>(v) + 1;
  }

  // --- propagation --------------------------------------------------------
  CRef propagate() {
    CRef conflict = kNoReason;
    while (qhead < trail.size()) {
      const Lit p = trail[qhead++];
      const Lit falselit = neg(p);
      auto& ws = watches[falselit];
      ++stats.propagations;
      std::size_t i = 0, j = 0;
      const std::size_t n = ws.size();
      while (i < n) {
        const Watch w = ws[i];
        if (value(w.blocker) == 1) {
          ws[j++] = ws[i++];
          continue;
        }
        const CRef c = w.cref;
        Lit* lits = clits(c);
        if (lits[0] == falselit) std::swap(lits[0], lits[1]);
        ++i;
        const Lit first = lits[0];
        if (first != w.blocker && value(first) == 1) {
          ws[j++] = {c, first};
          continue;
        }
        const std::uint32_t size = csize(c);
        bool moved = false;
        for (std::uint32_t k = 2; k < size; ++k) {
          if (value(lits[k]) != -1) {
            lits[1] = lits[k];
            lits[k] = falselit;
            watches[lits[1]].push_back({c, first});
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = {c, first};
        if (value(first) == -1) {
          conflict = c;
          qhead = trail.size();
          while (i < n) ws[j++] = ws[i++];
        } else {
          enqueue(first, c);
        }
      }
      ws.resize(j);
      if (conflict != kNoReason) break;
    }
    return conflict;
  }

  // --- activity -----------------------------------------------------------
  void bump_var(std::uint32_t v) {
    if ((activity[v] += var_inc) > 1e100) {
      for (double& a : activity) a *= 1e-100;
      var_inc *= 1e-100;
    }
    heap.increased(v);
  }
  void bump_clause(CRef c) {
    set_cact(c, cact(c) + cla_inc);
    if (cact(c) > 1e20f) {
      for (CRef l : learnts) set_cact(l, cact(l) * 1e-20f);
      cla_inc *= 1e-20f;
    }
  }

  // --- conflict analysis --------------------------------------------------
  std::uint32_t abstract_level(std::uint32_t v) const { return 1u << (level[v] & 31); }

  bool lit_redundant(Lit p, std::uint32_t abstract_levels) {
    analyze_stack.clear();
    analyze_stack.push_back(p);
    const std::size_t top = analyze_toclear.size();
    while (!analyze_stack.empty()) {
      const CRef c = reason[var_of(analyze_stack.back())];
      analyze_stack.pop_back();
      Lit* lits = clits(c);
      for (std::uint32_t i = 1; i < csize(c); ++i) {
        const Lit q = lits[i];
        const auto v = var_of(q);
        if (seen[v] || level[v] == 0) continue;
        if (reason[v] != kNoReason && (abstract_level(v) & abstract_levels) != 0) {
          seen[v] = 1;
          analyze_stack.push_back(q);
          analyze_toclear.push_back(q);
        } else {
          for (std::size_t k = top; k < analyze_toclear.size(); ++k) seen[var_of(analyze_toclear[k])] = 0;
          analyze_toclear.resize(top);
          return false;
        }
      }
    }
    return true;
  }

  std::uint32_t compute_lbd(const std::vector<Lit>& lits) {
    ++stamp;
    std::uint32_t n = 0;
    for (Lit l : lits) {
      const auto lv = static_cast<std::size_t>(level[var_of(l)]);
      if (level_stamp[lv] != stamp) {
        level_stamp[lv] = stamp;
        ++n;
      }
    }
    return n;
  }

  void analyze(CRef confl, std::vector<Lit>& out_learnt, int& out_level) {
    int path = 0;
    Lit p = kNoLit;
    out_learnt.assign(1, kNoLit);
    std::size_t idx = trail.size();
    do {
      if (learnt(confl)) bump_clause(confl);
      Lit* lits = clits(confl);
      for (std::uint32_t i = (p == kNoLit ? 0 : 1); i < csize(confl); ++i) {
        const Lit q = lits[i];
        const auto v = var_of(q);
        if (seen[v] || level[v] == 0) continue;
        bump_var(v);
        seen[v] = 1;
        if (level[v] >= decision_level())
          ++path;
        else
          out_learnt.push_back(q);
      }
      while (!seen[var_of(trail[--idx])]) {
      }
      p = trail[idx];
      confl = reason[var_of(p)];
      seen[var_of(p)] = 0;
      --path;
    } while (path > 0);
    out_learnt[0] = neg(p);

    analyze_toclear = out_learnt;
    std::uint32_t abstract_levels = 0;
    for (std::size_t i = 1; i < out_learnt.size(); ++i) abstract_levels |= abstract_level(var_of(out_learnt[i]));
    std::size_t j = 1;
    for (std::size_t i = 1; i < out_learnt.size(); ++i) {
      const auto v = var_of(out_learnt[i]);
      if (reason[v] == kNoReason || !lit_redundant(out_learnt[i], abstract_levels)) out_learnt[j++] = out_learnt[i];
    }
    out_learnt.resize(j);

    out_level = 0;
    if (out_learnt.size() > 1) {
      std::size_t max_i = 1;
      for (std::size_t i = 2; i < out_learnt.size(); ++i) {
        if (level[var_of(out_learnt[i])] > level[var_of(out_learnt[max_i])]) max_i = i;
      }
      std::swap(out_learnt[1], out_learnt[max_i]);
      out_level = level[var_of(out_learnt[1])];
    }
    for (Lit l : analyze_toclear) seen[var_of(l)] = 0;
  }

  // --- clause database ----------------------------------------------------
  bool locked(CRef c) {
    const Lit l0 = clits(c)[0];
    return value(l0) == 1 && reason[var_of(l0)] == c;
  }

  void reduce_db() {
    std::vector<CRef> sorted = learnts;
    std::sort(sorted.begin(), sorted.end(), [&](CRef a, CRef b) {
      if (lbd(a) != lbd(b)) return lbd(a) > lbd(b);
      return cact(a) < cact(b);
    });
    std::size_t removed = 0;
    const std::size_t target = sorted.size() / 2;
    for (CRef c : sorted) {
      if (removed >= target) break;
      if (lbd(c) <= 2 || csize(c) <= 2 || locked(c)) continue;
      mem[c + 1] |= 2u;
      ++removed;
    }
    collect_garbage();
  }

  void collect_garbage() {
    std::vector<std::uint32_t> fresh;
    fresh.reserve(mem.size());
    const auto move = [&](CRef c) {
      const CRef n = static_cast<CRef>(fresh.size());
      fresh.insert(fresh.end(), mem.begin() + c, mem.begin() + c + 3 + csize(c));
      return n;
    };
    // Reasons are relocated through a forwarding pointer written into the
    // old header's activity slot.
    std::vector<CRef> new_originals, new_learnts;
    for (CRef c : originals) {
      const CRef n = move(c);
      mem[c + 2] = n;
      new_originals.push_back(n);
    }
    for (CRef c : learnts) {
      if (deleted(c)) continue;
      const CRef n = move(c);
      fresh[n + 2] = mem[c + 2];
      mem[c + 2] = n;
      new_learnts.push_back(n);
    }
    for (Lit l : trail) {
      const auto v = var_of(l);
      if (reason[v] != kNoReason) reason[v] = mem[reason[v] + 2];
    }
    mem = std::move(fresh);
    originals = std::move(new_originals);
    learnts = std::move(new_learnts);
    for (auto& w : watches) w.clear();
    for (CRef c : originals) attach(c);
    for (CRef c : learnts) attach(c);
  }

  // --- search -------------------------------------------------------------
  Lit pick_branch() {
    while (!heap.empty()) {
      const auto v = heap.pop();
      if (assigns[v] == 0) return make_lit(v, phase[v]);
    }
    return kNoLit;
  }

  bool should_restart() {
    if (stable) return conflicts_since_restart >= luby_budget;
    return conflicts_since_restart >= 50 && lbd_fast > 1.25 * lbd_slow;
  }

  void restart() {
    ++stats.restarts;
    conflicts_since_restart = 0;
    if (stable) luby_budget = static_cast<std::uint64_t>(512 * luby(2.0, luby_index++));
    cancel_until(0);
  }

  SolveStatus search(const SolveLimits& limits, std::chrono::steady_clock::time_point start,
                     std::uint64_t conflict_base) {
    std::vector<Lit> learnt_clause;
    for (;;) {
      const CRef confl = propagate();
      if (confl != kNoReason) {
        ++stats.conflicts;
        ++conflicts_since_restart;
        if (decision_level() == 0) return SolveStatus::Unsat;
        int bt = 0;
        analyze(confl, learnt_clause, bt);
        cancel_until(bt);
        const std::uint32_t l = compute_lbd(learnt_clause);
        stats.learnt_literals += learnt_clause.size();
        if (learnt_clause.size() == 1) {
          enqueue(learnt_clause[0], kNoReason);
        } else {
          const CRef c = alloc(learnt_clause, true, l);
          learnts.push_back(c);
          attach(c);
          bump_clause(c);
          enqueue(learnt_clause[0], c);
        }
        lbd_fast += (l - lbd_fast) / 32.0;
        lbd_slow += (l - lbd_slow) / 4096.0;
        var_inc /= var_decay;
        cla_inc /= 0.999f;

        if ((stats.conflicts & 255) == 0) {
          const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
          if (secs > limits.max_seconds) return SolveStatus::Timeout;
          if (limits.stop && limits.stop->load(std::memory_order_relaxed)) return SolveStatus::Timeout;
        }
        if (stats.conflicts - conflict_base >= limits.max_conflicts) return SolveStatus::Timeout;
        if (stats.conflicts >= mode_switch_at) {
          stable = !stable;
          mode_length *= 2;
          mode_switch_at = stats.conflicts + mode_length;
          luby_index = 0;
          luby_budget = 512;
          conflicts_since_restart = 0;
        }
        if (stats.conflicts >= next_reduce) {
          next_reduce = stats.conflicts + 2000 + 300 * ++reduces;
          reduce_db();
        }
      } else {
        if (should_restart()) {
          restart();
          continue;
        }
        const Lit next = pick_branch();
        if (next == kNoLit) return SolveStatus::Sat;
        ++stats.decisions;
        trail_lim.push_back(trail.size());
        enqueue(next, kNoReason);
      }
    }
  }

  bool add_clause(std::span<const int> in) {
    original_lits.emplace_back(in.begin(), in.end());
    if (!ok) return false;
    cancel_until(0);
    std::vector<Lit> lits;
    for (int l : in) {
      if (l == 0 || std::abs(l) > static_cast<int>(assigns.size()))
        throw std::invalid_argument("literal references undeclared variable");
      lits.push_back(from_dimacs(l));
    }
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    std::vector<Lit> kept;
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (i + 1 < lits.size() && lits[i + 1] == neg(lits[i])) return true;  // tautology
      const LBool v = value(lits[i]);
      if (v == 1) return true;
      if (v == 0) kept.push_back(lits[i]);
    }
    if (kept.empty()) return ok = false;
    if (kept.size() == 1) {
      enqueue(kept[0], kNoReason);
      if (propagate() != kNoReason) ok = false;
      return ok;
    }
    const CRef c = alloc(kept, false, 0);
    originals.push_back(c);
    attach(c);
    return true;
  }
};

CdclSolver::CdclSolver(int num_vars, std::uint64_t seed) : impl_(std::make_unique<Impl>(seed)) {
  for (int i = 0; i < num_vars; ++i) impl_->add_var();
}

CdclSolver::~CdclSolver() = default;

int CdclSolver::num_vars() const { return static_cast<int>(impl_->assigns.size()); }
int CdclSolver::new_var() { return impl_->add_var(); }
bool CdclSolver::add_clause(std::span<const int> lits) { return impl_->add_clause(lits); }

SolveStatus CdclSolver::solve(const SolveLimits& limits) {
  Impl& s = *impl_;
  const auto start = std::chrono::steady_clock::now();
  const double base_seconds = s.stats.seconds;
  SolveStatus status = SolveStatus::Unsat;
  if (s.ok) {
    s.cancel_until(0);
    if (s.propagate() != kNoReason) {
      s.ok = false;
    } else {
      status = s.search(limits, start, s.stats.conflicts);
      if (status == SolveStatus::Unsat) s.ok = false;
    }
  }
  s.model.clear();
  if (status == SolveStatus::Sat) {
    s.model.assign(s.assigns.size() + 1, false);
    for (std::size_t v = 0; v < s.assigns.size(); ++v) s.model[v + 1] = s.assigns[v] == 1;
    for (const auto& clause : s.original_lits) {
      const bool sat = std::any_of(clause.begin(), clause.end(), [&](int l) {
        return s.model[static_cast<std::size_t>(std::abs(l))] == (l > 0);
      });
      if (!sat) throw std::logic_error("internal error: model violates an input clause");
    }
  }
  s.stats.seconds = base_seconds + std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return status;
}

bool CdclSolver::model_value(int v) const { return impl_->model.at(static_cast<std::size_t>(v)); }
std::vector<bool> CdclSolver::model() const { return impl_->model; }
const SolveStats& CdclSolver::stats() const { return impl_->stats; }

}  // namespace unitlab
