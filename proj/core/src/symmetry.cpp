#include "unitlab/symmetry.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "unitlab/ball.hpp"

namespace unitlab {

PElement PAutomorphism::apply(const PElement& g) const { return p_eval(substitute(p_decomposition_word(g), images)); }

PRing PAutomorphism::apply(const PRing& x) const {
  return apply_automorphism(PGroup{}, images, x, [](const PElement& g) { return p_decomposition_word(g); });
}

PAutomorphism compose(const PAutomorphism& phi, const PAutomorphism& psi) {
  return {phi.name + "*" + psi.name, {substitute(psi.images[0], phi.images), substitute(psi.images[1], phi.images)}};
}

PAutomorphism p_identity_auto() {
  return {"id", {GroupWord::generator(PGroup::kA), GroupWord::generator(PGroup::kB)}};
}
PAutomorphism p_alpha() {
  return {"alpha", {GroupWord::generator(PGroup::kA, -1), GroupWord::generator(PGroup::kB)}};
}
PAutomorphism p_beta() {
  return {"beta", {GroupWord::generator(PGroup::kA), GroupWord::generator(PGroup::kB, -1)}};
}
PAutomorphism p_pi() { return {"pi", {GroupWord::generator(PGroup::kB), GroupWord::generator(PGroup::kA)}}; }

namespace {

const CayleyBall<PGroup>& ball_of(std::size_t radius) {
  static std::map<std::size_t, CayleyBall<PGroup>> cache;
  static std::mutex mu;
  const std::lock_guard lock(mu);
  auto it = cache.find(radius);
  if (it == cache.end()) it = cache.emplace(radius, CayleyBall<PGroup>::build(PGroup{}, radius)).first;
  return it->second;
}

}  // namespace

bool same_automorphism(const PAutomorphism& x, const PAutomorphism& y, std::size_t radius) {
  const auto& ball = ball_of(radius);
  for (std::size_t i = 0; i < ball.size(); ++i) {
    if (p_eval(substitute(ball.word_of(i), x.images)) != p_eval(substitute(ball.word_of(i), y.images))) return false;
  }
  return true;
}

AutoGroup AutoGroup::generate(std::string name, const std::vector<PAutomorphism>& gens, std::size_t radius) {
  AutoGroup g;
  g.name_ = std::move(name);
  const auto find = [&](const PAutomorphism& a) -> std::size_t {
    for (std::size_t i = 0; i < g.elements_.size(); ++i) {
      if (same_automorphism(g.elements_[i], a, radius)) return i;
    }
    return g.elements_.size();
  };
  g.elements_.push_back(p_identity_auto());
  for (std::size_t i = 0; i < g.elements_.size(); ++i) {
    for (const auto& s : gens) {
      PAutomorphism next = compose(s, g.elements_[i]);
      if (find(next) == g.elements_.size()) {
        next.name = s.name + (g.elements_[i].name == "id" ? "" : "*" + g.elements_[i].name);
        g.elements_.push_back(std::move(next));
      }
    }
  }
  const std::size_t n = g.elements_.size();
  g.table_.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = find(compose(g.elements_[i], g.elements_[j]));
      if (k == n) throw std::logic_error("automorphism closure is not closed under composition");
      g.table_[i][j] = k;
    }
  }
  return g;
}

bool AutoGroup::is_group() const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    if (table_[0][i] != i || table_[i][0] != i) return false;
    bool has_inverse = false;
    for (std::size_t j = 0; j < n; ++j) has_inverse = has_inverse || (table_[i][j] == 0 && table_[j][i] == 0);
    if (!has_inverse) return false;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (table_[table_[i][j]][k] != table_[i][table_[j][k]]) return false;
      }
    }
  }
  return true;
}

const AutoGroup& group_s() {
  static const AutoGroup s = AutoGroup::generate("S", {p_alpha(), p_beta(), p_pi()});
  return s;
}

const AutoGroup& group_t() {
  static const AutoGroup t = [] {
    PAutomorphism ab = compose(p_alpha(), p_beta());
    ab.name = "alpha*beta";
    return AutoGroup::generate("T", {p_pi(), ab});
  }();
  return t;
}

std::vector<std::vector<std::size_t>> orbits_partition(const std::vector<PRing>& units, const AutoGroup& g) {
  std::map<PRing, std::size_t> index;
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (!index.emplace(units[i], i).second) throw std::invalid_argument("orbit input contains duplicates");
  }
  std::vector<int> orbit_of(units.size(), -1);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (orbit_of[i] >= 0) continue;
    std::vector<std::size_t> orbit;
    for (const auto& phi : g.elements()) {
      const PRing img = phi.apply(units[i]);
      auto it = index.find(img);
      if (it == index.end())
        throw OrbitClosureError("image of unit " + std::to_string(i) + " under " + phi.name + " is not in the list");
      if (orbit_of[it->second] < 0) {
        orbit_of[it->second] = static_cast<int>(orbits.size());
        orbit.push_back(it->second);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

bool is_swap_unit(const PRing& u) {
  const PGroup p;
  return u.size() > 1 && ring_mul(p, u, p_pi().apply(u)) == PRing::one(p);
}

SwapCompat swap_compat_check(const PRing& u) {
  if (!is_swap_unit(u)) throw std::invalid_argument("input is not a swap unit");
  SwapCompat r;
  r.alpha_image = p_alpha().apply(u);
  r.beta_image = p_beta().apply(u);
  r.alpha_equals_beta = r.alpha_image == r.beta_image;
  return r;
}

std::size_t count_squares(const PRing& u) {
  return static_cast<std::size_t>(std::count_if(u.support().begin(), u.support().end(), p_is_square));
}

}  // namespace unitlab
