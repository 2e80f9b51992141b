#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>

#include "unitlab/group.hpp"

namespace unitlab {

// Free abelian group Z^K on generators e1..eK, written additively.
template <std::size_t K>
struct ZnElement {
  std::array<Exponent, K> c{};
  auto operator<=>(const ZnElement&) const = default;
};

template <std::size_t K>
class ZnGroup {
 public:
  using Element = ZnElement<K>;

  ZnGroup() : alphabet_(numbered_alphabet("e", K)) {}
  const GeneratorAlphabet& alphabet() const { return alphabet_; }
  Element identity() const { return {}; }
  Element generator(std::size_t i) const {
    if (i >= K) throw std::out_of_range("generator index out of range");
    Element e;
    e.c[i] = 1;
    return e;
  }
  Element mul(const Element& x, const Element& y) const {
    Element r;
    for (std::size_t i = 0; i < K; ++i) r.c[i] = checked_add(x.c[i], y.c[i]);
    return r;
  }
  Element inv(const Element& x) const {
    Element r;
    for (std::size_t i = 0; i < K; ++i) r.c[i] = checked_neg(x.c[i]);
    return r;
  }

 private:
  GeneratorAlphabet alphabet_;
};

}  // namespace unitlab

template <std::size_t K>
struct std::hash<unitlab::ZnElement<K>> {
  std::size_t operator()(const unitlab::ZnElement<K>& x) const noexcept {
    std::size_t h = K;
    for (auto v : x.c) h = unitlab::hash_combine(h, static_cast<std::uint64_t>(v));
    return h;
  }
};
