#include "unitlab/encode.hpp"

#include <cstdlib>
#include <stdexcept>

namespace unitlab {

std::vector<std::size_t> swap_permutation(const CayleyBall<PGroup>& ball) {
  const PGroup p;
  const std::vector<GroupWord> swap{GroupWord::generator(PGroup::kB), GroupWord::generator(PGroup::kA)};
  std::vector<std::size_t> perm(ball.size());
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const auto img = ball.index_of(evaluate(p, substitute(ball.word_of(i), swap)));
    if (!img) throw std::invalid_argument("ball is not closed under the swap automorphism");
    perm[i] = *img;
  }
  return perm;
}

CnfInstance encode_swap_search(const CayleyBall<PGroup>& ball) {
  const PGroup p;
  const auto perm = swap_permutation(ball);
  CnfInstance c;
  const std::size_t n = ball.size();
  std::vector<int> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = c.new_var(VarRole::U, static_cast<std::int64_t>(i));
  detail::ProductTable<PElement> t;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.add(p.mul(ball.element(i), ball.element(j)), u[i], u[perm[j]]);
  }
  t.emit(c, p.identity());
  c.add_at_least_two(u);
  c.meta["kind"] = "swap";
  c.meta["group"] = "P";
  c.meta["radius"] = std::to_string(ball.radius());
  c.meta["domain_size"] = std::to_string(n);
  return c;
}

std::vector<SElement> s_ball(int n) {
  if (n < 0) throw std::invalid_argument("B_N requires N >= 0");
  std::vector<SElement> out;
  for (int d = 0; d <= n; ++d) {
    for (int u = -d; u <= d; ++u) {
      for (int v = -(d - std::abs(u)); v <= d - std::abs(u); ++v) {
        const int rest = d - std::abs(u) - std::abs(v);
        if (rest == 0) {
          out.push_back({u, v, 0});
        } else {
          out.push_back({u, v, -rest});
          out.push_back({u, v, rest});
        }
      }
    }
  }
  return out;
}

CnfInstance encode_h4_split_unit_search(int n) {
  if (n < 1) throw std::invalid_argument("split unit search requires N >= 1");
  const auto dom = s_ball(n);
  const std::size_t m = dom.size();
  CnfInstance c;
  std::vector<int> al(m), be(m), alp(m), bep(m);
  for (std::size_t i = 0; i < m; ++i) al[i] = c.new_var(VarRole::Alpha, static_cast<std::int64_t>(i));
  for (std::size_t i = 0; i < m; ++i) be[i] = c.new_var(VarRole::Beta, static_cast<std::int64_t>(i));
  for (std::size_t i = 0; i < m; ++i) alp[i] = c.new_var(VarRole::AlphaPrime, static_cast<std::int64_t>(i));
  for (std::size_t i = 0; i < m; ++i) bep[i] = c.new_var(VarRole::BetaPrime, static_cast<std::int64_t>(i));
  const SElement z{0, 0, 1};
  detail::ProductTable<SElement> first, second;
  for (std::size_t i = 0; i < m; ++i) {
    const SElement gr = s_conj_r(dom[i]);
    for (std::size_t j = 0; j < m; ++j) {
      const SElement gh = s_mul(dom[i], dom[j]);
      first.add(gh, al[i], alp[j]);
      first.add(s_mul(z, s_mul(gr, dom[j])), be[i], bep[j]);
      second.add(gh, be[i], alp[j]);
      second.add(s_mul(gr, dom[j]), al[i], bep[j]);
    }
  }
  first.emit(c, SElement{});
  // The second equation has right-hand side 0 everywhere.
  for (std::size_t k = 0; k < second.targets.size(); ++k) {
    std::vector<int> ands;
    for (auto [x, y] : second.terms[k]) ands.push_back(c.add_and(x, y));
    c.add_parity(std::move(ands), false);
  }
  // dom[0] is the identity.
  c.add_clause({be[0]});
  c.add_clause({bep[0]});
  c.meta["kind"] = "h4-split-unit";
  c.meta["group"] = "H4";
  c.meta["radius"] = std::to_string(n);
  c.meta["domain_size"] = std::to_string(m);
  return c;
}

}  // namespace unitlab
