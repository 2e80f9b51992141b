#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "unitlab/ball.hpp"
#include "unitlab/cnf.hpp"
#include "unitlab/h4_group.hpp"
#include "unitlab/p_group.hpp"

namespace unitlab {

struct UnitSearchOptions {
  bool two_sided = false;
  bool forbid_trivial = true;
};

namespace detail {

// For every product target w: the list of (left var, right var) pairs whose
// product of domain elements is w. Targets are visited in a deterministic
// order (first occurrence in the g-major double loop).
template <class Element>
struct ProductTable {
  std::vector<Element> targets;
  std::vector<std::vector<std::pair<int, int>>> terms;
  std::unordered_map<Element, std::size_t> index;

  void add(const Element& w, int x, int y) {
    auto [it, fresh] = index.try_emplace(w, targets.size());
    if (fresh) {
      targets.push_back(w);
      terms.emplace_back();
    }
    terms[it->second].emplace_back(x, y);
  }

  // XOR of each target's products equals [target = one]; when `one` is not a
  // product at all the constraint is unsatisfiable.
  void emit(CnfInstance& c, const Element& one) const {
    if (!index.count(one)) c.add_clause({});
    for (std::size_t k = 0; k < targets.size(); ++k) {
      std::vector<int> ands;
      ands.reserve(terms[k].size());
      for (auto [x, y] : terms[k]) ands.push_back(c.add_and(x, y));
      c.add_parity(std::move(ands), targets[k] == one);
    }
  }
};

}  // namespace detail

// Variables u_g, v_g for every g in `domain` (ids 1..n and n+1..2n), and for
// every w in domain * domain the constraint XOR_{gh = w} (u_g and v_h) = [w = 1].
template <CanonicalGroup G>
CnfInstance encode_unit_search(const G& group, const std::vector<typename G::Element>& domain,
                               const UnitSearchOptions& opt = {}) {
  CnfInstance c;
  const std::size_t n = domain.size();
  std::vector<int> u(n), v(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = c.new_var(VarRole::U, static_cast<std::int64_t>(i));
  for (std::size_t i = 0; i < n; ++i) v[i] = c.new_var(VarRole::V, static_cast<std::int64_t>(i));
  detail::ProductTable<typename G::Element> uv, vu;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      uv.add(group.mul(domain[i], domain[j]), u[i], v[j]);
      if (opt.two_sided) vu.add(group.mul(domain[i], domain[j]), v[i], u[j]);
    }
  }
  uv.emit(c, group.identity());
  if (opt.two_sided) vu.emit(c, group.identity());
  if (opt.forbid_trivial) c.add_at_least_two(u);
  c.meta["kind"] = "unit";
  c.meta["domain_size"] = std::to_string(n);
  c.meta["two_sided"] = opt.two_sided ? "true" : "false";
  c.meta["forbid_trivial"] = opt.forbid_trivial ? "true" : "false";
  return c;
}

template <CanonicalGroup G>
CnfInstance encode_unit_search(const G& group, const CayleyBall<G>& ball, const UnitSearchOptions& opt = {}) {
  CnfInstance c = encode_unit_search(group, ball.elements(), opt);
  c.meta["radius"] = std::to_string(ball.radius());
  return c;
}

// Swap units in F2[P]: v_h is identified with u_{pi(h)} so only u-variables
// exist. Requires the ball to be closed under the swap a <-> b.
CnfInstance encode_swap_search(const CayleyBall<PGroup>& ball);

// Index of pi(g) for every ball element g.
std::vector<std::size_t> swap_permutation(const CayleyBall<PGroup>& ball);

// Variables a_s, b_s, c_{s,t}; models are (A, B) with every product in AB of
// multiplicity at least two.
template <CanonicalGroup G>
CnfInstance encode_upp_search(const G& group, const std::vector<typename G::Element>& domain) {
  CnfInstance c;
  const std::size_t n = domain.size();
  std::vector<int> a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = c.new_var(VarRole::A, static_cast<std::int64_t>(i));
  for (std::size_t i = 0; i < n; ++i) b[i] = c.new_var(VarRole::B, static_cast<std::int64_t>(i));
  std::vector<int> cv(n * n);
  std::unordered_map<typename G::Element, std::vector<std::size_t>> by_product;  // product -> pair ids
  std::vector<typename G::Element> order;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t id = i * n + j;
      cv[id] = c.new_var(VarRole::C, static_cast<std::int64_t>(i), static_cast<std::int64_t>(j));
      c.add_clause({-cv[id], a[i]});
      c.add_clause({-cv[id], b[j]});
      c.add_clause({cv[id], -a[i], -b[j]});
      const auto w = group.mul(domain[i], domain[j]);
      auto [it, fresh] = by_product.try_emplace(w);
      if (fresh) order.push_back(w);
      it->second.push_back(id);
    }
  }
  c.add_at_least_one(a);
  c.add_at_least_one(b);
  for (const auto& w : order) {
    const auto& ids = by_product.at(w);
    for (std::size_t id : ids) {
      std::vector<int> clause{-cv[id]};
      for (std::size_t other : ids) {
        if (other / n != id / n) clause.push_back(cv[other]);
      }
      c.add_clause(std::move(clause));
    }
  }
  c.meta["kind"] = "upp";
  c.meta["domain_size"] = std::to_string(n);
  return c;
}

// B_N = { a^u b^v z^w : |u| + |v| + |w| <= N } in S, in (|u|+|v|+|w|, u, v, w) order.
std::vector<SElement> s_ball(int n);

// u = alpha + r beta, v = alpha' + r beta' over B_N with
//   alpha alpha' + z beta^r beta' = 1,  beta alpha' + alpha^r beta' = 0,
// and the identity coefficient of beta and of beta' forced to 1.
CnfInstance encode_h4_split_unit_search(int n);

}  // namespace unitlab
