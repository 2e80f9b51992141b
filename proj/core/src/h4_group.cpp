#include "unitlab/h4_group.hpp"

#include <stdexcept>

namespace unitlab {

SElement s_mul(const SElement& x, const SElement& y) {
  return {checked_add(x.u, y.u), checked_add(x.v, y.v),
          checked_add(checked_add(x.w, y.w), checked_mul(2, checked_mul(x.v, y.u)))};
}

SElement s_inv(const SElement& x) {
  // a^-u b^-v z^c with c chosen so that x * x^-1 = 1: c = 2uv - w.
  return {checked_neg(x.u), checked_neg(x.v), checked_sub(checked_mul(2, checked_mul(x.u, x.v)), x.w)};
}

SElement s_conj_r(const SElement& x) { return {checked_neg(x.u), checked_neg(x.v), x.w}; }

// (r^w s)(r^w' s') = r^(w+w') s^(r^w') s'; r^2 = z is central.
H4Element h4_mul(const H4Element& x, const H4Element& y) {
  const SElement left = y.w ? s_conj_r(x.s_part()) : x.s_part();
  SElement prod = s_mul(left, y.s_part());
  if (x.w && y.w) {
    prod.w = checked_add(prod.w, 1);
    return H4Element::from(false, prod);
  }
  return H4Element::from(x.w || y.w, prod);
}

// (r s)^-1 = s^-1 r^-1 = s^-1 r z^-1 = r (s^-1)^r z^-1
H4Element h4_inv(const H4Element& x) {
  const SElement si = s_inv(x.s_part());
  if (!x.w) return H4Element::from(false, si);
  SElement c = s_conj_r(si);
  c.w = checked_sub(c.w, 1);
  return H4Element::from(true, c);
}

H4Element H4Group::generator(std::size_t i) const {
  switch (i) {
    case kR:
      return {true, 0, 0, 0};
    case kA:
      return {false, 1, 0, 0};
    case kB:
      return {false, 0, 1, 0};
    case kZ:
      return {false, 0, 0, 1};
    default:
      throw std::out_of_range("H4 has four polycyclic generators");
  }
}

SElement SGroup::generator(std::size_t i) const {
  switch (i) {
    case kA:
      return {1, 0, 0};
    case kB:
      return {0, 1, 0};
    case kZ:
      return {0, 0, 1};
    default:
      throw std::out_of_range("S has three generators");
  }
}

const std::vector<std::string>& H4FibGroup::image_words() {
  static const std::vector<std::string> words{
      "r",
      "r^-1*b*a^-1*r*a^-1*r",
      "r^-1*a*r^-1*a*b^-1*z*r^-1*a",
      "a^-1*r",
  };
  return words;
}

H4FibGroup::H4FibGroup() : alphabet_(numbered_alphabet("x", 4)) {
  const H4Group pc;
  for (const auto& w : image_words()) images_.push_back(evaluate(pc, w));
}

H4Element psi_eval(const GroupWord& w) {
  static const H4FibGroup fib;
  return evaluate(fib, w);
}

H4Element psi_eval(std::string_view text) {
  static const H4FibGroup fib;
  return evaluate(fib, text);
}

H4Element h4_eval(std::string_view text) { return evaluate(H4Group{}, text); }

const std::vector<GroupWord>& pc_generator_x_words() {
  static const std::vector<GroupWord> words = [] {
    const auto x = numbered_alphabet("x", 4);
    return std::vector<GroupWord>{parse_word("x1", x), parse_word("x1*x4^-1", x), parse_word("x1*x2*x4^-2", x),
                                  parse_word("x1*x2*x3*x4", x)};
  }();
  return words;
}

std::string to_string(const H4Element& g) {
  return "(" + std::to_string(g.w ? 1 : 0) + "," + std::to_string(g.s) + "," + std::to_string(g.t) + "," +
         std::to_string(g.u) + ")";
}

std::string to_string(const SElement& g) {
  return "(" + std::to_string(g.u) + "," + std::to_string(g.v) + "," + std::to_string(g.w) + ")";
}

FibPresentation fib_presentation(int r, int n) {
  if (r < 2 || r >= n) throw std::invalid_argument("Fibonacci group F(r,n) requires 2 <= r < n");
  FibPresentation p;
  p.r = r;
  p.n = n;
  p.alphabet = numbered_alphabet("x", static_cast<std::size_t>(n));
  // Relator starting at x_i for i = 2..n, then i = 1, matching x2x3x4/x1, ... for F(3,4).
  for (int k = 1; k <= n; ++k) {
    const int i = k % n;  // 0-based start index: 1, 2, ..., n-1, 0
    GroupWord w;
    for (int j = 0; j < r; ++j) w.append(static_cast<std::size_t>((i + j) % n), 1);
    w.append(static_cast<std::size_t>((i + r) % n), -1);
    p.relators.push_back(std::move(w));
  }
  return p;
}

}  // namespace unitlab
