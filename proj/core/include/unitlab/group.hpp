#pragma once

#include <concepts>
#include <cstddef>
#include <functional>

#include "unitlab/word.hpp"

namespace unitlab {

// A group with canonical element representatives. Equal group elements must
// compare equal and hash equally.
template <class G>
concept CanonicalGroup = requires(const G& g, const typename G::Element& x, std::size_t i) {
  typename G::Element;
  { g.alphabet() } -> std::convertible_to<const GeneratorAlphabet&>;
  { g.identity() } -> std::same_as<typename G::Element>;
  { g.generator(i) } -> std::same_as<typename G::Element>;
  { g.mul(x, x) } -> std::same_as<typename G::Element>;
  { g.inv(x) } -> std::same_as<typename G::Element>;
  { x < x } -> std::convertible_to<bool>;
  { x == x } -> std::convertible_to<bool>;
  { std::hash<typename G::Element>{}(x) } -> std::convertible_to<std::size_t>;
};

template <CanonicalGroup G>
typename G::Element power(const G& group, typename G::Element x, Exponent n) {
  if (n < 0) {
    x = group.inv(x);
    n = checked_neg(n);
  }
  auto acc = group.identity();
  while (n > 0) {
    if (n & 1) acc = group.mul(acc, x);
    n >>= 1;
    if (n > 0) x = group.mul(x, x);
  }
  return acc;
}

// Evaluates a word homomorphically.
template <CanonicalGroup G>
typename G::Element evaluate(const G& group, const GroupWord& w) {
  auto acc = group.identity();
  for (const auto& l : w.letters()) acc = group.mul(acc, power(group, group.generator(l.gen), l.exp));
  return acc;
}

template <CanonicalGroup G>
typename G::Element evaluate(const G& group, std::string_view text) {
  return evaluate(group, parse_word(text, group.alphabet()));
}

}  // namespace unitlab
