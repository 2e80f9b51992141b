#include <functional>
#include <random>
#include <set>

#include "doctest.h"
#include "unitlab/fib_wp.hpp"
#include "unitlab/h4_group.hpp"
#include "unitlab/p_group.hpp"

using namespace unitlab;

namespace {

GroupWord xw(std::string_view s, int n) { return parse_word(s, numbered_alphabet("x", static_cast<std::size_t>(n))); }

GroupWord random_word(std::mt19937_64& rng, int n, std::size_t len) {
  std::vector<int> e;
  for (std::size_t i = 0; i < len; ++i) {
    const int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    e.push_back(rng() & 1 ? g : -g);
  }
  return GroupWord::from_expanded(e);
}

// K_n -> Z x (C2 * ... * C2): exponent sum and the reduced index sequence.
// Injective, so it decides equality in K_n independently of kn_normalize.
std::pair<Exponent, IndexSeq> kn_invariant(const GroupWord& w) {
  Exponent sum = 0;
  IndexSeq idx;
  for (int s : w.expanded()) {
    sum += s > 0 ? 1 : -1;
    idx.push_back(std::abs(s));
  }
  return {sum, c2_reduce(idx)};
}

// Elements of <x1..xr | xi^2> up to length `len`, as reduced sequences.
std::vector<IndexSeq> c2_elements(int r, std::size_t len) {
  std::vector<IndexSeq> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == len) continue;
    for (int g = 1; g <= r; ++g) {
      if (!out[i].empty() && out[i].back() == g) continue;
      IndexSeq s = out[i];
      s.push_back(g);
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("K_n normal form examples") {
  CHECK(kn_normalize(xw("x1^2", 4), 4) == KnNormalForm{4, {}, 2});
  CHECK(kn_normalize(xw("x1*x2^2*x3", 4), 4) == KnNormalForm{4, {1, 3}, 2});
  CHECK(kn_normalize(GroupWord{}, 4) == KnNormalForm{4, {}, 0});
  CHECK(kn_normalize(xw("x4", 4), 4) == KnNormalForm{4, {}, 1});
  CHECK(kn_normalize(xw("x1^-1", 4), 4) == KnNormalForm{4, {1}, -2});
  CHECK_THROWS_AS(kn_normalize(xw("x5", 5), 4), std::invalid_argument);
}

TEST_CASE("K_n normal form agrees with the injective invariant") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 10000; ++it) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const GroupWord w = random_word(rng, n, rng() % 11);
    const GroupWord v = random_word(rng, n, rng() % 11);
    const KnNormalForm nw = kn_normalize(w, n), nv = kn_normalize(v, n);
    const auto iw = kn_invariant(w), iv = kn_invariant(v);
    CHECK((nw == nv) == (iw == iv));
    CHECK(kn_invariant(kn_to_word(nw)) == iw);
    CHECK(nw.zpow + static_cast<Exponent>(nw.indices.size()) == iw.first);
    for (std::size_t i = 0; i + 1 < nw.indices.size(); ++i) CHECK(nw.indices[i] != nw.indices[i + 1]);
    if (!nw.indices.empty()) CHECK(nw.indices.back() != n);
    CHECK(kn_multiply(nw, nv) == kn_normalize(w * v, n));
  }
}

TEST_CASE("C2 free product helpers") {
  CHECK(c2_reduce({1, 2, 2, 1, 3}) == IndexSeq{3});
  CHECK(c2_multiply({4, 2, 1}, {1, 2, 1, 3}) == IndexSeq{4, 1, 3});
  CHECK(c2_cycle_power(3, 2) == IndexSeq{1, 2, 3, 1, 2, 3});
  CHECK(c2_cycle_power(3, -1) == IndexSeq{3, 2, 1});
  CHECK(c2_cycle_power(3, 0).empty());
  CHECK(index_shortlex_less({3}, {1, 2}));
  CHECK(index_shortlex_less({1, 3}, {2, 1}));
}

TEST_CASE("coset representatives") {
  CHECK(coset_rep({1, 2}, 2) == CosetRep{1, {}});
  CHECK(coset_rep({1}, 2) == CosetRep{0, {1}});
  CHECK(coset_rep({}, 5) == CosetRep{0, {}});
  // Brute force: the rep is the shortlex-least element of U s among all
  // (x1..xr)^k s for |k| <= bound.
  for (int r = 2; r <= 4; ++r) {
    for (const auto& s : c2_elements(r, 6)) {
      const CosetRep cr = coset_rep(s, r);
      CHECK(c2_multiply(c2_cycle_power(r, cr.upow), cr.rep) == s);
      IndexSeq best = s;
      for (Exponent k = -8; k <= 8; ++k) {
        const IndexSeq cand = c2_multiply(c2_cycle_power(r, k), s);
        if (index_shortlex_less(cand, best)) best = cand;
      }
      CHECK(cr.rep == best);
    }
  }
}

TEST_CASE("coset representatives in the second factor") {
  // n = 5, r = 2: B on x3..x5 with U = <x5 x4 x3>.
  const int n = 5, r = 2;
  const auto cyc = [&](Exponent k) {
    IndexSeq one{5, 4, 3}, out;
    if (k < 0) one = {3, 4, 5};
    for (Exponent i = 0; i < (k < 0 ? -k : k); ++i) out = c2_multiply(out, one);
    return out;
  };
  for (const auto& base : c2_elements(3, 5)) {
    IndexSeq s;
    for (int i : base) s.push_back(i + 2);
    const CosetRep cr = coset_rep_b(s, n, r);
    CHECK(c2_multiply(cyc(cr.upow), cr.rep) == s);
    // Representatives are least in their coset under the relabelled order.
    for (Exponent k = -6; k <= 6; ++k) {
      const IndexSeq cand = c2_multiply(cyc(k), s);
      CHECK(coset_rep_b(cand, n, r).rep == cr.rep);
    }
  }
}

TEST_CASE("L_n normal form") {
  CHECK(ln_normalize(xw("x1^2", 4), 4, 2).is_identity());
  CHECK(ln_normalize(GroupWord{}, 4, 2).is_identity());
  CHECK(ln_normalize(xw("x1*x2*x3*x4", 4), 4, 2).is_identity());  // w_4 is killed
  CHECK_FALSE(ln_normalize(xw("x1*x2", 4), 4, 2).is_identity());
  // The amalgamation relation x1 x2 = x4 x3.
  CHECK(ln_normalize(xw("x1*x2*x3^-1*x4^-1", 4), 4, 2).is_identity());
  CHECK(ln_normalize(xw("x1*x2*x3*x4^-1*x5^-1", 5), 5, 2).is_identity());
}

TEST_CASE("L_4 normal forms match the polycyclic image modulo z") {
  // L_4 = H_4 / <z>; compare psi images with the z-coordinate dropped.
  std::mt19937_64 rng(23);
  std::vector<GroupWord> words;
  for (int i = 0; i < 400; ++i) words.push_back(random_word(rng, 4, rng() % 9));
  const auto mod_z = [](const GroupWord& w) {
    H4Element g = psi_eval(w);
    g.u = 0;
    return g;
  };
  for (std::size_t i = 0; i < words.size(); ++i) {
    CHECK(ln_normalize(words[i], 4, 2).is_identity() == (mod_z(words[i]) == H4Element{}));
    for (std::size_t j = i + 1; j < std::min(words.size(), i + 20); ++j) {
      CHECK((ln_normalize(words[i], 4, 2) == ln_normalize(words[j], 4, 2)) == (mod_z(words[i]) == mod_z(words[j])));
    }
  }
}

TEST_CASE("H_n word problem examples") {
  CHECK(hn_is_identity(xw("x2*x3*x4*x1^-1", 4), 4, 1000).answer == WordProblemAnswer::Identity);
  CHECK(hn_is_identity(xw("x1^2*x2^-2", 4), 4, 1000).answer == WordProblemAnswer::Identity);
  CHECK(hn_is_identity(xw("x1", 4), 4, 1000).answer == WordProblemAnswer::NotIdentity);
  const auto z = hn_is_identity(xw("x1^2", 4), 4, 1000);
  CHECK(z.answer == WordProblemAnswer::NotIdentity);
  CHECK(z.rho == 1);
  CHECK_THROWS_AS(hn_is_identity(xw("x1", 3), 3, 10), std::invalid_argument);
}

TEST_CASE("H_4 word problem agrees with the polycyclic image on short words") {
  std::size_t words = 0, trivial = 0;
  std::vector<int> cur;
  std::function<void()> rec = [&] {
    const GroupWord w = GroupWord::from_expanded(cur);
    const bool oracle = psi_eval(w) == H4Element{};
    const auto r = hn_is_identity(w, 4, 100000);
    CHECK(r.answer != WordProblemAnswer::Unknown);
    CHECK((r.answer == WordProblemAnswer::Identity) == oracle);
    ++words;
    trivial += oracle;
    if (cur.size() == 5) return;
    for (int g = 1; g <= 4; ++g) {
      for (int s : {g, -g}) {
        if (!cur.empty() && cur.back() == -s) continue;
        cur.push_back(s);
        rec();
        cur.pop_back();
      }
    }
  };
  rec();
  CHECK(words == 1 + 8 + 56 + 392 + 2744 + 19208);
  CHECK(trivial > 1);
}

TEST_CASE("H_n for n >= 5") {
  for (int n : {5, 6, 7}) {
    const auto pres = fib_presentation(n - 1, n);
    for (const auto& rel : pres.relators) CHECK(hn_is_identity(rel, n, 20000).answer == WordProblemAnswer::Identity);
    // x1^2 = w_n and w_n is the product of all generators.
    GroupWord wn;
    for (int i = 0; i < n; ++i) wn.append(static_cast<std::size_t>(i), 1);
    CHECK(hn_is_identity(GroupWord::generator(0, 2) * wn.inverse(), n, 20000).answer == WordProblemAnswer::Identity);
    CHECK(hn_is_identity(GroupWord::generator(1, 2) * GroupWord::generator(0, -2), n, 20000).answer ==
          WordProblemAnswer::Identity);
    CHECK(hn_is_identity(GroupWord::generator(0), n, 20000).answer == WordProblemAnswer::NotIdentity);
  }
  // w_n has infinite order for even n; for odd n the abelianisation still
  // separates w_n^k with k not divisible by n - 2.
  CHECK(hn_is_identity(GroupWord::generator(0, 2), 6, 20000).answer == WordProblemAnswer::NotIdentity);
  CHECK(hn_is_identity(GroupWord::generator(0, 2), 5, 20000).answer == WordProblemAnswer::NotIdentity);
}

TEST_CASE("abelianisation of H_n sends w_n to an element of order n - 2") {
  // x_j -> 1 for j < n, x_n -> n - 1 in Z / 2(n - 2) kills every relator.
  for (int n = 4; n <= 9; ++n) {
    const Exponent m = 2 * (n - 2);
    const auto image = [&](const GroupWord& w) {
      Exponent s = 0;
      for (const auto& l : w.letters()) s += l.exp * (static_cast<int>(l.gen) == n - 1 ? n - 1 : 1);
      return ((s % m) + m) % m;
    };
    for (const auto& rel : fib_presentation(n - 1, n).relators) CHECK(image(rel) == 0);
    CHECK(image(GroupWord::generator(0, 2)) == 2);
  }
}

TEST_CASE("F(2, 6) maps onto P") {
  // a = x1 x2, b = x1 x2^2, so x2 = a^-1 b and x1 = a b^-1 a.
  const PGroup p;
  std::vector<PElement> x{p_eval("a*b^-1*a"), p_eval("a^-1*b")};
  for (int i = 2; i < 6; ++i) x.push_back(p.mul(x[i - 2], x[i - 1]));
  for (const auto& rel : fib_presentation(2, 6).relators) {
    PElement g = p.identity();
    for (const auto& l : rel.letters()) g = p.mul(g, power(p, x[l.gen], l.exp));
    CHECK(g == p.identity());
  }
  CHECK(p.mul(x[0], x[1]) == p_eval("a"));
  CHECK(p.mul(x[0], p.mul(x[1], x[1])) == p_eval("b"));
}
