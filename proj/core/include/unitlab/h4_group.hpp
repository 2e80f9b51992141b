#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "unitlab/group.hpp"

namespace unitlab {

// a^u b^v z^w in S = pc<a, b, z | b^a = b z^2>, the index-2 subgroup of H4.
struct SElement {
  Exponent u = 0, v = 0, w = 0;
  auto operator<=>(const SElement&) const = default;
};

// (a^u b^v z^w)(a^u' b^v' z^w') = a^(u+u') b^(v+v') z^(w+w'+2vu')
SElement s_mul(const SElement& x, const SElement& y);
SElement s_inv(const SElement& x);
// r^-1 x r: (a^u b^v z^w)^r = a^-u b^-v z^w
SElement s_conj_r(const SElement& x);

// r^w a^s b^t z^u in H4 = pc<r, a, b, z | r^2 = z, a^r = a^-1, b^r = b^-1, b^a = b z^2>.
struct H4Element {
  bool w = false;
  Exponent s = 0, t = 0, u = 0;

  SElement s_part() const { return {s, t, u}; }
  static H4Element from(bool r, const SElement& x) { return {r, x.u, x.v, x.w}; }

  auto operator<=>(const H4Element&) const = default;
};

H4Element h4_mul(const H4Element& x, const H4Element& y);
H4Element h4_inv(const H4Element& x);

// H4 on the polycyclic generators r, a, b, z.
class H4Group {
 public:
  using Element = H4Element;
  static constexpr std::size_t kR = 0, kA = 1, kB = 2, kZ = 3;

  const GeneratorAlphabet& alphabet() const { return alphabet_; }
  H4Element identity() const { return {}; }
  H4Element generator(std::size_t i) const;
  H4Element mul(const H4Element& x, const H4Element& y) const { return h4_mul(x, y); }
  H4Element inv(const H4Element& x) const { return h4_inv(x); }

 private:
  GeneratorAlphabet alphabet_{"r", "a", "b", "z"};
};

// H4 = F(3,4) on the Fibonacci generators x1..x4, evaluated in the
// polycyclic normal form via
//   x1 = r, x2 = r^-1 b (a^-1 r)^2, x3 = (a^-1 r)^-2 b^-1 z r^-1 a, x4 = a^-1 r.
class H4FibGroup {
 public:
  using Element = H4Element;

  H4FibGroup();
  const GeneratorAlphabet& alphabet() const { return alphabet_; }
  H4Element identity() const { return {}; }
  H4Element generator(std::size_t i) const { return images_.at(i); }
  H4Element mul(const H4Element& x, const H4Element& y) const { return h4_mul(x, y); }
  H4Element inv(const H4Element& x) const { return h4_inv(x); }

  // Words over {r, a, b, z} giving the images of x1..x4.
  static const std::vector<std::string>& image_words();

 private:
  GeneratorAlphabet alphabet_;
  std::vector<H4Element> images_;
};

// The subgroup S on generators a, b, z.
class SGroup {
 public:
  using Element = SElement;
  static constexpr std::size_t kA = 0, kB = 1, kZ = 2;

  const GeneratorAlphabet& alphabet() const { return alphabet_; }
  SElement identity() const { return {}; }
  SElement generator(std::size_t i) const;
  SElement mul(const SElement& x, const SElement& y) const { return s_mul(x, y); }
  SElement inv(const SElement& x) const { return s_inv(x); }

 private:
  GeneratorAlphabet alphabet_{"a", "b", "z"};
};

// Evaluates a word over {x1, x2, x3, x4}.
H4Element psi_eval(const GroupWord& w);
H4Element psi_eval(std::string_view text);
// Evaluates a word over {r, a, b, z}.
H4Element h4_eval(std::string_view text);

// x-words for the polycyclic generators: r = x1, a = x1 x4^-1,
// b = x1 x2 x4^-2, z = x1 x2 x3 x4.
const std::vector<GroupWord>& pc_generator_x_words();

std::string to_string(const H4Element& g);
std::string to_string(const SElement& g);

// F(r, n) = <x1..xn | x_i x_{i+1} ... x_{i+r-1} x_{i+r}^-1>, indices mod n.
struct FibPresentation {
  int r = 0, n = 0;
  GeneratorAlphabet alphabet;
  std::vector<GroupWord> relators;
};

FibPresentation fib_presentation(int r, int n);

}  // namespace unitlab

template <>
struct std::hash<unitlab::SElement> {
  std::size_t operator()(const unitlab::SElement& x) const noexcept {
    std::size_t h = unitlab::hash_combine(0x2545f4914f6cdd1dULL, static_cast<std::uint64_t>(x.u));
    h = unitlab::hash_combine(h, static_cast<std::uint64_t>(x.v));
    return unitlab::hash_combine(h, static_cast<std::uint64_t>(x.w));
  }
};

template <>
struct std::hash<unitlab::H4Element> {
  std::size_t operator()(const unitlab::H4Element& x) const noexcept {
    return unitlab::hash_combine(std::hash<unitlab::SElement>{}(x.s_part()), x.w ? 1 : 2);
  }
};
