#include <random>

#include "doctest.h"
#include "unitlab/group.hpp"
#include "unitlab/h4_group.hpp"

using namespace unitlab;

TEST_CASE("polycyclic relations") {
  const H4Element r{true, 0, 0, 0};
  CHECK(h4_mul(r, r) == H4Element{false, 0, 0, 1});
  CHECK(h4_eval("r^-1*a*r") == H4Element{false, -1, 0, 0});
  CHECK(h4_eval("r^-1*b*r") == H4Element{false, 0, -1, 0});
  CHECK(h4_eval("a^-1*b*a") == h4_eval("b*z^2"));
  CHECK(h4_mul({false, 1, 1, 0}, {false, 1, 0, 0}) == H4Element{false, 2, 1, 2});
  CHECK(h4_eval("z*r") == h4_eval("r*z"));
}

TEST_CASE("S multiplication and conjugation by r") {
  CHECK(s_mul({0, 1, 0}, {1, 0, 0}) == SElement{1, 1, 2});
  CHECK(s_mul({1, 0, 0}, {0, 1, 0}) == SElement{1, 1, 0});
  CHECK(s_conj_r({2, -3, 5}) == SElement{-2, 3, 5});
  // Against collection in the pc presentation: words a^u b^v z^w multiplied
  // and re-evaluated letter by letter.
  const SGroup s;
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(-4, 4);
  for (int it = 0; it < 500; ++it) {
    const SElement x{e(rng), e(rng), e(rng)}, y{e(rng), e(rng), e(rng)};
    GroupWord w{{SGroup::kA, x.u}, {SGroup::kB, x.v}, {SGroup::kZ, x.w}};
    w.append(GroupWord{{SGroup::kA, y.u}, {SGroup::kB, y.v}, {SGroup::kZ, y.w}});
    CHECK(evaluate(s, w) == s_mul(x, y));
  }
}

TEST_CASE("group laws on random tuples") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> e(-8, 8);
  const auto rnd = [&] { return H4Element{static_cast<bool>(rng() & 1), e(rng), e(rng), e(rng)}; };
  for (int it = 0; it < 10000; ++it) {
    const H4Element x = rnd(), y = rnd(), z = rnd();
    CHECK(h4_mul(h4_mul(x, y), z) == h4_mul(x, h4_mul(y, z)));
    CHECK(h4_mul(x, h4_inv(x)) == H4Element{});
    CHECK(h4_mul(h4_inv(x), x) == H4Element{});
  }
}

TEST_CASE("Fibonacci images") {
  CHECK(psi_eval("x1") == H4Element{true, 0, 0, 0});
  CHECK(psi_eval("x2*x3*x4*x1^-1") == H4Element{});
  CHECK(psi_eval("x1^2") == H4Element{false, 0, 0, 1});
  for (const char* w : {"x1^2", "x2^2", "x3^2", "x4^2"}) CHECK(psi_eval(w) == psi_eval("x1*x2*x3*x4"));
  const auto f = fib_presentation(3, 4);
  REQUIRE(f.relators.size() == 4);
  for (const auto& rel : f.relators) CHECK(psi_eval(rel) == H4Element{});
  const H4Group h;
  for (std::size_t k = 0; k < 4; ++k) CHECK(psi_eval(pc_generator_x_words()[k]) == h.generator(k));
}

TEST_CASE("Fibonacci presentations") {
  const auto f34 = fib_presentation(3, 4);
  const std::vector<std::string> want{"x1*x2*x3*x4^-1", "x2*x3*x4*x1^-1", "x3*x4*x1*x2^-1", "x4*x1*x2*x3^-1"};
  std::vector<std::string> got;
  for (const auto& r : f34.relators) got.push_back(to_string(r, f34.alphabet));
  std::sort(got.begin(), got.end());
  CHECK(got == want);
  const auto f26 = fib_presentation(2, 6);
  CHECK(f26.relators.size() == 6);
  for (const auto& r : f26.relators) CHECK(r.length() == 3);
  CHECK_THROWS_AS(fib_presentation(2, 2), std::invalid_argument);
}
