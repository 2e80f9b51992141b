#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "group_spec.hpp"
#include "unitlab/ball.hpp"
#include "unitlab/datasets.hpp"
#include "unitlab/encode.hpp"
#include "unitlab/fib_wp.hpp"
#include "unitlab/solve.hpp"
#include "unitlab/symmetry.hpp"
#include "unitlab/unit_file.hpp"

namespace unitlab::cli {

using nlohmann::json;

namespace {

double now_seconds() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

std::string join(const std::vector<std::string>& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? std::string(sep) : "") + v[i];
  return out;
}

template <class T>
std::string join_numbers(const std::vector<T>& v) {
  std::ostringstream o;
  for (std::size_t i = 0; i < v.size(); ++i) o << (i ? " " : "") << v[i];
  return o.str();
}

SolverConfig solver_config(const Options& o) {
  SolverConfig c;
  if (o.solver == "embedded") {
    c.backend = Backend::Embedded;
  } else if (o.solver == "external") {
    c.backend = Backend::External;
  } else if (o.solver == "portfolio") {
    c.backend = Backend::Portfolio;
  } else {
    throw UsageError("--solver must be embedded, external or portfolio");
  }
  c.external_path = o.solver_path;
  c.limits.max_seconds = o.limit_seconds;
  c.limits.max_conflicts = std::numeric_limits<std::uint64_t>::max();
  c.limits.seed = o.seed;
  return c;
}

int status_exit(SolveStatus s) {
  switch (s) {
    case SolveStatus::Sat:
      return kOk;
    case SolveStatus::Unsat:
      return kRefuted;
    case SolveStatus::Timeout:
      return kTimeout;
  }
  return kRefuted;
}

void require_radius(const Options& o) {
  if (o.radius < 0) throw UsageError("--radius N (N >= 0) is required");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

std::size_t default_generator_count(const PGroup&) { return 2; }
std::size_t default_generator_count(const H4Model&) { return 4; }
std::size_t default_generator_count(const Fib26Model&) { return 6; }

template <class G>
std::vector<std::size_t> generator_indices(const G& g, const Options& o) {
  std::vector<std::size_t> out;
  if (o.generators.empty()) {
    for (std::size_t i = 0; i < default_generator_count(g); ++i) out.push_back(i);
    return out;
  }
  std::stringstream ss(o.generators);
  std::string sym;
  while (std::getline(ss, sym, ',')) {
    const std::size_t i = g.alphabet().find(sym);
    if (i == g.alphabet().size())
      throw UsageError("unknown generator '" + sym + "' (alphabet: " + join(g.alphabet().names(), ",") + ")");
    out.push_back(i);
  }
  if (out.empty()) throw UsageError("--generators is empty");
  return out;
}

template <class G>
CayleyBall<G> make_ball(const G& g, const Options& o) {
  require_radius(o);
  return CayleyBall<G>::build(g, generator_indices(g, o), static_cast<std::size_t>(o.radius));
}

template <class G>
std::vector<std::string> ball_words(const G& g, const CayleyBall<G>& ball, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(to_string(ball.word_of(i), g.alphabet()));
  return out;
}

template <class G>
RingElt<G> ring_of(const CayleyBall<G>& ball, const std::vector<std::size_t>& idx) {
  std::vector<typename G::Element> t;
  for (std::size_t i : idx) t.push_back(ball.element(i));
  return RingElt<G>(std::move(t));
}

std::string unit_file_text(const std::string& group, const std::vector<std::string>& labels,
                           const std::vector<std::vector<std::string>>& blocks) {
  std::string out = "# group: " + group + "\n";
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += "\n";
    out += "# " + labels[b] + "\n";
    for (const auto& w : blocks[b]) out += w + "\n";
  }
  return out;
}

template <class F>
CommandResult with_group(const GroupSpec& spec, F&& f) {
  switch (spec.kind) {
    case GroupKind::P:
      return f(PGroup{});
    case GroupKind::H4:
      return f(h4_model());
    case GroupKind::Fib26:
      return f(fib26_model());
    case GroupKind::FibWordProblem:
      break;
  }
  throw UsageError("group " + spec.text + " is only supported by wp and normal-form");
}

UnitFile load_file(const Options& o, const GeneratorAlphabet& alphabet) {
  if (o.file.empty()) throw UsageError("--file FILE is required");
  return parse_unit_file(read_text_file(o.file), alphabet);
}

json base(const std::string& command, const Options& o) { return {{"command", command}, {"group", o.group}}; }

// ---------------------------------------------------------------------------

CommandResult cmd_ball(const Options& o) {
  return with_group(parse_group_spec(o.group), [&](const auto& g) {
    const double t0 = now_seconds();
    const auto ball = make_ball(g, o);
    const double dt = now_seconds() - t0;
    CommandResult r;
    std::vector<std::string> gens;
    for (std::size_t i : ball.generators()) gens.push_back(g.alphabet().name(i));
    r.data = base("ball", o);
    r.data["radius"] = o.radius;
    r.data["generators"] = gens;
    r.data["ball_sizes"] = ball.ball_sizes();
    r.data["sphere_sizes"] = ball.sphere_sizes();
    r.data["seconds"] = dt;
    std::ostringstream t;
    t << "group " << o.group << ", generators " << join(gens, ",") << " and inverses\n";
    t << std::setw(8) << "radius" << std::setw(10) << "sphere" << std::setw(10) << "ball" << "\n";
    const auto bs = ball.ball_sizes(), ss = ball.sphere_sizes();
    for (std::size_t i = 0; i < bs.size(); ++i) t << std::setw(8) << i << std::setw(10) << ss[i] << std::setw(10) << bs[i] << "\n";
    t << "ball sizes: " << join_numbers(bs) << "\n";
    t << "sphere sizes: " << join_numbers(ss) << "\n";
    r.text = t.str();
    return r;
  });
}

CommandResult cmd_verify_unit(const Options& o) {
  return with_group(parse_group_spec(o.group), [&](const auto& g) {
    using G = std::decay_t<decltype(g)>;
    const UnitFile f = load_file(o, g.alphabet());
    CommandResult r;
    r.data = base("verify-unit", o);
    if (o.swap) {
      if constexpr (std::is_same_v<G, PGroup>) {
        if (f.blocks.empty()) throw UsageError("file has no unit");
        const PRing u = ring_from_words(g, f.blocks[0]);
        const bool ok = is_swap_unit(u);
        r.exit_code = ok ? kOk : kRefuted;
        r.data["swap_unit"] = ok;
        r.data["support_size"] = u.size();
        r.text = std::string(ok ? "swap unit" : "not a swap unit") + ", support " + std::to_string(u.size()) + "\n";
        return r;
      } else {
        throw UsageError("--swap requires --group P");
      }
    } else {
      if (f.blocks.size() != 2) throw UsageError("expected two blocks (unit and inverse) in " + o.file);
      const auto u = ring_from_words(g, f.blocks[0]);
      const auto v = ring_from_words(g, f.blocks[1]);
      const UnitVerdict verdict = verify_unit_pair(g, u, v, o.two_sided);
      r.exit_code = verdict == UnitVerdict::NontrivialUnit ? kOk : kRefuted;
      r.data["verdict"] = to_string(verdict);
      r.data["two_sided"] = o.two_sided;
      r.data["support_sizes"] = {u.size(), v.size()};
      r.text = to_string(verdict) + ", supports " + std::to_string(u.size()) + " and " + std::to_string(v.size()) + "\n";
      return r;
    }
  });
}

CommandResult cmd_search_unit(const Options& o, bool swap) {
  return with_group(parse_group_spec(o.group), [&](const auto& g) {
    using G = std::decay_t<decltype(g)>;
    const auto ball = make_ball(g, o);
    CnfInstance c;
    if (swap) {
      if constexpr (std::is_same_v<G, PGroup>) {
        if (!o.generators.empty()) throw UsageError("swap search uses the generators a, b");
        c = encode_swap_search(ball);
      } else {
        throw UsageError("swap search requires --group P");
      }
    } else {
      c = encode_unit_search(g, ball, {.two_sided = o.two_sided, .forbid_trivial = true});
    }
    const SolveResult s = solve(c, solver_config(o));
    CommandResult r;
    r.data = base(swap ? "search-swap" : "search-unit", o);
    r.data["radius"] = o.radius;
    r.data["ball_size"] = ball.size();
    r.data["vars"] = c.num_vars();
    r.data["clauses"] = c.clauses().size();
    r.data["status"] = to_string(s.status);
    r.data["backend"] = s.backend;
    r.data["seconds"] = s.stats.seconds;
    r.exit_code = status_exit(s.status);
    std::ostringstream t;
    t << "ball of radius " << o.radius << " (" << ball.size() << " elements), " << c.num_vars() << " variables, "
      << c.clauses().size() << " clauses\n";
    t << to_string(s.status) << " (" << s.backend << ", " << std::fixed << std::setprecision(2) << s.stats.seconds
      << " s)\n";
    if (s.status == SolveStatus::Sat) {
      const auto ui = decode_role(c, *s.model, VarRole::U);
      const auto u = ring_of(ball, ui);
      std::vector<std::vector<std::string>> blocks{ball_words(g, ball, ui)};
      std::vector<std::string> labels{swap ? "swap unit" : "unit"};
      bool verified = false;
      if constexpr (std::is_same_v<G, PGroup>) {
        if (swap) verified = is_swap_unit(u);
      }
      if (!swap) {
        const auto vi = decode_role(c, *s.model, VarRole::V);
        verified = verify_unit_pair(g, u, ring_of(ball, vi), o.two_sided) == UnitVerdict::NontrivialUnit;
        blocks.push_back(ball_words(g, ball, vi));
        labels.push_back("inverse");
        r.data["inverse"] = blocks[1];
      }
      if (!verified) throw std::logic_error("decoded model failed ring-level verification");
      r.data["unit"] = blocks[0];
      r.data["verified"] = verified;
      t << "verified " << labels[0] << " with support " << u.size() << "\n";
      for (std::size_t b = 0; b < blocks.size(); ++b) t << labels[b] << ": " << join(blocks[b], " + ") << "\n";
      if (!o.out.empty()) write_file(o.out, unit_file_text(o.group, labels, blocks));
    }
    r.text = t.str();
    return r;
  });
}

CommandResult cmd_enum_units(const Options& o) {
  return with_group(parse_group_spec(o.group), [&](const auto& g) {
    using G = std::decay_t<decltype(g)>;
    const auto ball = make_ball(g, o);
    CnfInstance c;
    if (o.swap) {
      if constexpr (std::is_same_v<G, PGroup>) {
        if (!o.generators.empty()) throw UsageError("swap search uses the generators a, b");
        c = encode_swap_search(ball);
      } else {
        throw UsageError("--swap requires --group P");
      }
    } else {
      c = encode_unit_search(g, ball, {.two_sided = o.two_sided, .forbid_trivial = true});
    }
    std::size_t verified = 0;
    const auto check = [&](const Model& m) {
      const auto u = ring_of(ball, decode_role(c, m, VarRole::U));
      bool ok = false;
      if constexpr (std::is_same_v<G, PGroup>) {
        if (o.swap) ok = is_swap_unit(u);
      }
      if (!o.swap) {
        const auto v = ring_of(ball, decode_role(c, m, VarRole::V));
        ok = verify_unit_pair(g, u, v, o.two_sided) == UnitVerdict::NontrivialUnit;
      }
      if (!ok) throw std::logic_error("decoded model failed ring-level verification");
      ++verified;
    };
    const EnumerateResult e = enumerate_all(c, c.vars_with_role({VarRole::U}), solver_config(o), check);
    CommandResult r;
    r.data = base("enum-units", o);
    r.data["radius"] = o.radius;
    r.data["swap"] = o.swap;
    r.data["complete"] = e.complete;
    r.data["count"] = e.models.size();
    r.data["solver_calls"] = e.solver_calls;
    r.data["seconds"] = e.seconds;
    std::vector<std::vector<std::string>> blocks;
    std::vector<std::string> labels;
    std::map<std::size_t, std::size_t> hist;
    for (const auto& m : e.models) {
      std::vector<std::size_t> idx;
      for (int v : m) idx.push_back(static_cast<std::size_t>(c.info(v).i));
      blocks.push_back(ball_words(g, ball, idx));
      labels.push_back("unit " + std::to_string(blocks.size()));
      ++hist[idx.size()];
    }
    r.data["units"] = blocks;
    json h = json::object();
    for (auto [k, v] : hist) h[std::to_string(k)] = v;
    r.data["support_histogram"] = h;
    r.exit_code = e.complete ? kOk : kTimeout;
    std::ostringstream t;
    t << e.models.size() << (o.swap ? " swap units" : " units") << " on the ball of radius " << o.radius
      << (e.complete ? "" : " (incomplete: a solver call hit its limit)") << ", " << e.solver_calls
      << " solver calls, " << std::fixed << std::setprecision(2) << e.seconds << " s\n";
    t << "support sizes:";
    for (auto [k, v] : hist) t << " " << k << " x" << v;
    t << "\n";
    r.text = t.str();
    if (!o.out.empty()) write_file(o.out, unit_file_text(o.group, labels, blocks));
    return r;
  });
}

CommandResult cmd_search_upp(const Options& o) {
  return with_group(parse_group_spec(o.group), [&](const auto& g) {
    const auto ball = make_ball(g, o);
    const CnfInstance c = encode_upp_search(g, ball.elements());
    const SolveResult s = solve(c, solver_config(o));
    CommandResult r;
    r.data = base("search-upp", o);
    r.data["radius"] = o.radius;
    r.data["ball_size"] = ball.size();
    r.data["vars"] = c.num_vars();
    r.data["clauses"] = c.clauses().size();
    r.data["status"] = to_string(s.status);
    r.data["backend"] = s.backend;
    r.data["seconds"] = s.stats.seconds;
    r.exit_code = status_exit(s.status);
    std::ostringstream t;
    t << "ball of radius " << o.radius << " (" << ball.size() << " elements): " << to_string(s.status) << " ("
      << std::fixed << std::setprecision(2) << s.stats.seconds << " s)\n";
    if (s.status == SolveStatus::Sat) {
      const auto ai = decode_role(c, *s.model, VarRole::A), bi = decode_role(c, *s.model, VarRole::B);
      std::vector<typename std::decay_t<decltype(g)>::Element> a, b;
      for (std::size_t i : ai) a.push_back(ball.element(i));
      for (std::size_t i : bi) b.push_back(ball.element(i));
      if (!upp_witness_check(g, a, b)) throw std::logic_error("decoded sets fail the unique product check");
      const auto wa = ball_words(g, ball, ai), wb = ball_words(g, ball, bi);
      r.data["A"] = wa;
      r.data["B"] = wb;
      r.data["verified"] = true;
      t << "verified: no product of A (" << a.size() << ") and B (" << b.size() << ") is unique\n";
      t << "A: " << join(wa, " ") << "\nB: " << join(wb, " ") << "\n";
      if (!o.out.empty()) write_file(o.out, unit_file_text(o.group, {"A", "B"}, {wa, wb}));
    }
    r.text = t.str();
    return r;
  });
}

CommandResult cmd_verify_upp(const Options& o) {
  return with_group(parse_group_spec(o.group), [&](const auto& g) {
    const UnitFile f = load_file(o, g.alphabet());
    if (f.blocks.size() != 2) throw UsageError("expected two blocks (A and B) in " + o.file);
    std::vector<typename std::decay_t<decltype(g)>::Element> a, b;
    for (const auto& w : f.blocks[0]) a.push_back(evaluate(g, w));
    for (const auto& w : f.blocks[1]) b.push_back(evaluate(g, w));
    const bool ok = upp_witness_check(g, a, b);
    std::size_t unique = 0;
    for (const auto& [elt, m] : product_multiplicities(g, a, b)) unique += m == 1;
    CommandResult r;
    r.exit_code = ok ? kOk : kRefuted;
    r.data = base("verify-upp", o);
    r.data["verified"] = ok;
    r.data["sizes"] = {a.size(), b.size()};
    r.data["unique_products"] = unique;
    r.text = std::string(ok ? "verified" : "refuted") + ": |A| = " + std::to_string(a.size()) + ", |B| = " +
             std::to_string(b.size()) + ", " + std::to_string(unique) + " unique products\n";
    return r;
  });
}

CommandResult cmd_orbits(const Options& o) {
  if (parse_group_spec(o.group).kind != GroupKind::P) throw UsageError("orbits requires --group P");
  const AutoGroup* ag = nullptr;
  if (o.automorphisms == "S") {
    ag = &group_s();
  } else if (o.automorphisms == "T") {
    ag = &group_t();
  } else {
    throw UsageError("--auto must be S or T");
  }
  const PGroup p;
  const UnitFile f = load_file(o, p.alphabet());
  std::vector<PRing> units;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < f.blocks.size(); ++i) {
    units.push_back(ring_from_words(p, f.blocks[i]));
    labels.push_back(i < f.labels.size() && !f.labels[i].empty() ? f.labels[i] : "#" + std::to_string(i + 1));
  }
  CommandResult r;
  r.data = base("orbits", o);
  r.data["automorphisms"] = o.automorphisms;
  try {
    const auto orbits = orbits_partition(units, *ag);
    json list = json::array();
    std::ostringstream t;
    t << orbits.size() << " orbits under " << ag->name() << " (order " << ag->size() << ")\n";
    for (const auto& orb : orbits) {
      std::vector<std::string> names;
      for (std::size_t i : orb) names.push_back(labels[i]);
      list.push_back(names);
      t << "  {" << join(names, ", ") << "}\n";
    }
    r.data["orbits"] = list;
    r.text = t.str();
  } catch (const OrbitClosureError& e) {
    r.exit_code = kRefuted;
    r.data["error"] = e.what();
    r.text = std::string("not closed: ") + e.what() + "\n";
  }
  return r;
}

int wp_n(const Options& o) {
  if (o.n > 0) return o.n;
  const GroupSpec g = parse_group_spec(o.group);
  if (g.kind == GroupKind::H4 || g.kind == GroupKind::FibWordProblem) return g.n;
  throw UsageError("--n N or --group Fib:n-1,n is required");
}

CommandResult cmd_wp(const Options& o) {
  const int n = wp_n(o);
  if (n < 4) throw UsageError("the word problem needs n >= 4");
  const GroupWord w = parse_word(o.word, numbered_alphabet("x", static_cast<std::size_t>(n)));
  const WordProblemResult res = hn_is_identity(w, n, o.budget);
  CommandResult r;
  r.data = {{"command", "wp"}, {"n", n}, {"word", o.word}, {"answer", to_string(res.answer)}, {"explored", res.explored}};
  if (res.rho) r.data["rho"] = *res.rho;
  switch (res.answer) {
    case WordProblemAnswer::Identity:
      r.exit_code = kOk;
      break;
    case WordProblemAnswer::NotIdentity:
      r.exit_code = kRefuted;
      break;
    case WordProblemAnswer::Unknown:
      r.exit_code = kTimeout;
      break;
  }
  r.text = to_string(res.answer) + "\n";
  if (res.rho) r.text += "image in L_n is trivial; word = w_" + std::to_string(n) + "^" + std::to_string(*res.rho) + "\n";
  return r;
}

CommandResult cmd_normal_form(const Options& o) {
  const int n = wp_n(o);
  const int rr = o.r > 0 ? o.r : n / 2;
  if (n < 4 || rr < 2 || rr > n - 2) throw UsageError("normal-form needs n >= 4 and 2 <= r <= n-2");
  const GroupWord w = parse_word(o.word, numbered_alphabet("x", static_cast<std::size_t>(n)));
  const KnNormalForm kn = kn_normalize(w, n);
  const AmalgamNormalForm ln = ln_normalize(w, n, rr);
  CommandResult r;
  json syl = json::array();
  for (const auto& s : ln.syllables) syl.push_back({{"factor", s.in_b ? "B" : "A"}, {"indices", s.seq}});
  r.data = {{"command", "normal-form"},
            {"n", n},
            {"r", rr},
            {"word", o.word},
            {"kn", {{"indices", kn.indices}, {"zpow", kn.zpow}, {"text", to_string(kn)}}},
            {"ln", {{"upow", ln.upow}, {"syllables", syl}, {"text", to_string(ln)}}}};
  r.text = "K_" + std::to_string(n) + ": " + to_string(kn) + "\nL_" + std::to_string(n) + " (r = " +
           std::to_string(rr) + "): " + to_string(ln) + "\n";
  return r;
}

CommandResult cmd_encode(const Options& o) {
  const GroupSpec spec = parse_group_spec(o.group);
  CnfInstance c;
  if (o.kind == "h4split") {
    if (o.radius < 1) throw UsageError("--radius N (N >= 1) is required");
    c = encode_h4_split_unit_search(o.radius);
  } else {
    CommandResult dummy = with_group(spec, [&](const auto& g) {
      using G = std::decay_t<decltype(g)>;
      const auto ball = make_ball(g, o);
      if (o.kind == "unit") {
        c = encode_unit_search(g, ball, {.two_sided = o.two_sided, .forbid_trivial = true});
      } else if (o.kind == "upp") {
        c = encode_upp_search(g, ball.elements());
        c.meta["radius"] = std::to_string(o.radius);
      } else if (o.kind == "swap") {
        if constexpr (std::is_same_v<G, PGroup>) {
          c = encode_swap_search(ball);
        } else {
          throw UsageError("--kind swap requires --group P");
        }
      } else {
        throw UsageError("--kind must be unit, swap, upp or h4split");
      }
      return CommandResult{};
    });
    (void)dummy;
  }
  c.meta["group"] = o.kind == "h4split" ? "H4" : o.group;
  const std::string text = to_dimacs(c);
  CommandResult r;
  r.data = base("encode", o);
  r.data["kind"] = o.kind;
  r.data["vars"] = c.num_vars();
  r.data["clauses"] = c.clauses().size();
  if (o.out.empty()) {
    r.data["dimacs"] = text;
    r.text = text;
  } else {
    write_file(o.out, text);
    r.data["out"] = o.out;
    r.text = "wrote " + o.out + ": " + std::to_string(c.num_vars()) + " variables, " +
             std::to_string(c.clauses().size()) + " clauses\n";
  }
  return r;
}

CommandResult cmd_verify_bundle(const Options&) {
  const auto checks = verify_bundle();
  CommandResult r;
  json list = json::array();
  std::ostringstream t;
  bool ok = true;
  for (const auto& c : checks) {
    list.push_back({{"id", c.id}, {"pass", c.pass}, {"finding", c.finding}, {"detail", c.detail}});
    ok = ok && (c.pass || c.finding);
    t << (c.pass ? "pass  " : c.finding ? "note  " : "FAIL  ") << std::left << std::setw(20) << c.id << c.detail
      << "\n";
  }
  r.exit_code = ok ? kOk : kRefuted;
  r.data = {{"command", "verify-bundle"}, {"datasets", list}, {"all_pass", ok}};
  r.text = t.str();
  return r;
}

}  // namespace

CommandResult run_command(const std::string& name, const Options& o) {
  CommandResult r;
  if (name == "ball") r = cmd_ball(o);
  else if (name == "verify-unit") r = cmd_verify_unit(o);
  else if (name == "search-unit") r = cmd_search_unit(o, o.swap);
  else if (name == "search-swap") r = cmd_search_unit(o, true);
  else if (name == "enum-units") r = cmd_enum_units(o);
  else if (name == "search-upp") r = cmd_search_upp(o);
  else if (name == "verify-upp") r = cmd_verify_upp(o);
  else if (name == "orbits") r = cmd_orbits(o);
  else if (name == "wp") r = cmd_wp(o);
  else if (name == "normal-form") r = cmd_normal_form(o);
  else if (name == "encode") r = cmd_encode(o);
  else if (name == "verify-bundle") r = cmd_verify_bundle(o);
  else throw UsageError("unknown subcommand '" + name + "'");
  r.data["exit_code"] = r.exit_code;
  return r;
}

}  // namespace unitlab::cli
