#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "unitlab/word.hpp"

using unitlab::cli::Options;

namespace {

void add_group(CLI::App* c, Options& o) {
  c->add_option("--group", o.group, "P, H4 or Fib:r,n")->capture_default_str();
}

void add_radius(CLI::App* c, Options& o, bool required = true) {
  auto* opt = c->add_option("--radius", o.radius, "ball radius")->check(CLI::NonNegativeNumber);
  if (required) opt->required();
}

void add_generators(CLI::App* c, Options& o) {
  c->add_option("--generators", o.generators, "comma-separated generator symbols for the ball");
}

void add_solver(CLI::App* c, Options& o) {
  c->add_option("--solver", o.solver, "embedded, external or portfolio")
      ->check(CLI::IsMember({"embedded", "external", "portfolio"}))
      ->capture_default_str();
  c->add_option("--solver-path", o.solver_path, "external solver binary")->envname("UNITLAB_SOLVER");
  c->add_option("--limit-seconds", o.limit_seconds, "wall-clock limit per solver call")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  c->add_option("--seed", o.seed, "solver seed");
}

void add_out(CLI::App* c, Options& o) { c->add_option("--out", o.out, "write result file"); }

void add_file(CLI::App* c, Options& o) { c->add_option("--file", o.file, "unit file")->required(); }

void add_wp(CLI::App* c, Options& o) {
  add_group(c, o);
  c->add_option("--n", o.n, "number of generators")->check(CLI::Range(4, 1 << 20));
  c->add_option("--word", o.word, "word in x1..xn")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unitlab: units and unique products in group algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "print JSON");

  auto* ball = app.add_subcommand("ball", "ball and sphere sizes");
  add_group(ball, o);
  add_radius(ball, o);
  add_generators(ball, o);

  auto* verify_unit = app.add_subcommand("verify-unit", "check a unit file (unit, inverse)");
  add_group(verify_unit, o);
  add_file(verify_unit, o);
  verify_unit->add_flag("--two-sided", o.two_sided, "also check v*u = 1");
  verify_unit->add_flag("--swap", o.swap, "check the swap condition on the first block");

  auto* search_unit = app.add_subcommand("search-unit", "search a ball for a nontrivial unit");
  add_group(search_unit, o);
  add_radius(search_unit, o);
  add_generators(search_unit, o);
  add_solver(search_unit, o);
  search_unit->add_flag("--two-sided", o.two_sided, "require v*u = 1 as well");
  search_unit->add_flag("--swap", o.swap, "search swap units (P only)");
  add_out(search_unit, o);

  auto* search_swap = app.add_subcommand("search-swap", "search a ball of P for a swap unit");
  add_group(search_swap, o);
  add_radius(search_swap, o);
  add_solver(search_swap, o);
  add_out(search_swap, o);

  auto* enum_units = app.add_subcommand("enum-units", "enumerate all unit supports on a ball");
  add_group(enum_units, o);
  add_radius(enum_units, o);
  add_generators(enum_units, o);
  add_solver(enum_units, o);
  enum_units->add_flag("--two-sided", o.two_sided, "require v*u = 1 as well");
  enum_units->add_flag("--swap", o.swap, "enumerate swap units (P only)");
  add_out(enum_units, o);

  auto* search_upp = app.add_subcommand("search-upp", "search a ball for sets without a unique product");
  add_group(search_upp, o);
  add_radius(search_upp, o);
  add_generators(search_upp, o);
  add_solver(search_upp, o);
  add_out(search_upp, o);

  auto* verify_upp = app.add_subcommand("verify-upp", "check a witness file (A, B)");
  add_group(verify_upp, o);
  add_file(verify_upp, o);

  auto* orbits = app.add_subcommand("orbits", "orbits of units under S or T");
  add_group(orbits, o);
  add_file(orbits, o);
  orbits->add_option("--auto", o.automorphisms, "S or T")->check(CLI::IsMember({"S", "T"}))->capture_default_str();

  auto* wp = app.add_subcommand("wp", "word problem in F(n-1, n)");
  add_wp(wp, o);
  wp->add_option("--budget", o.budget, "search budget")->capture_default_str();

  auto* nf = app.add_subcommand("normal-form", "normal forms in K_n and L_n");
  add_wp(nf, o);
  nf->add_option("--r", o.r, "amalgam split (default n/2)");

  auto* encode = app.add_subcommand("encode", "write a DIMACS instance");
  add_group(encode, o);
  add_radius(encode, o);
  add_generators(encode, o);
  encode->add_option("--kind", o.kind, "unit, swap, upp or h4split")
      ->check(CLI::IsMember({"unit", "swap", "upp", "h4split"}))
      ->capture_default_str();
  encode->add_flag("--two-sided", o.two_sided, "require v*u = 1 as well");
  add_out(encode, o);

  app.add_subcommand("verify-bundle", "verify every bundled dataset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : unitlab::cli::kUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    const auto r = unitlab::cli::run_command(name, o);
    if (o.json) {
      std::cout << r.data.dump(2) << "\n";
    } else {
      std::cout << r.text;
    }
    return r.exit_code;
  } catch (const unitlab::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return unitlab::cli::kUsage;
  } catch (const unitlab::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return unitlab::cli::kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return unitlab::cli::kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return unitlab::cli::kRefuted;
  }
}
