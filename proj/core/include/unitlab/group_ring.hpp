#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "unitlab/group.hpp"

namespace unitlab {

// Element of F2[G]: the set of group elements with coefficient 1, kept
// sorted and duplicate-free.
template <CanonicalGroup G>
class RingElt {
 public:
  using Element = typename G::Element;

  RingElt() = default;
  // Builds from a multiset; elements occurring an even number of times cancel.
  explicit RingElt(std::vector<Element> terms) : support_(std::move(terms)) { normalize(); }

  static RingElt one(const G& group) { return RingElt({group.identity()}); }
  static RingElt single(const Element& g) { return RingElt({g}); }

  const std::vector<Element>& support() const { return support_; }
  std::size_t size() const { return support_.size(); }
  bool is_zero() const { return support_.empty(); }
  bool contains(const Element& g) const { return std::binary_search(support_.begin(), support_.end(), g); }

  bool operator==(const RingElt&) const = default;
  auto operator<=>(const RingElt& o) const {
    if (support_.size() != o.support_.size()) return support_.size() <=> o.support_.size();
    return std::lexicographical_compare_three_way(support_.begin(), support_.end(), o.support_.begin(),
                                                  o.support_.end());
  }

 private:
  void normalize() {
    std::sort(support_.begin(), support_.end());
    std::vector<Element> out;
    out.reserve(support_.size());
    for (std::size_t i = 0; i < support_.size();) {
      std::size_t j = i;
      while (j < support_.size() && support_[j] == support_[i]) ++j;
      if ((j - i) % 2 == 1) out.push_back(support_[i]);
      i = j;
    }
    support_ = std::move(out);
  }

  std::vector<Element> support_;
};

template <CanonicalGroup G>
RingElt<G> ring_add(const RingElt<G>& x, const RingElt<G>& y) {
  std::vector<typename G::Element> out;
  std::set_symmetric_difference(x.support().begin(), x.support().end(), y.support().begin(), y.support().end(),
                                std::back_inserter(out));
  return RingElt<G>(std::move(out));
}

template <CanonicalGroup G>
RingElt<G> ring_mul(const G& group, const RingElt<G>& x, const RingElt<G>& y) {
  std::vector<typename G::Element> terms;
  terms.reserve(x.size() * y.size());
  for (const auto& g : x.support()) {
    for (const auto& h : y.support()) terms.push_back(group.mul(g, h));
  }
  return RingElt<G>(std::move(terms));
}

template <CanonicalGroup G>
RingElt<G> ring_from_words(const G& group, const std::vector<GroupWord>& words) {
  std::vector<typename G::Element> terms;
  for (const auto& w : words) terms.push_back(evaluate(group, w));
  return RingElt<G>(std::move(terms));
}

enum class UnitVerdict { TrivialUnit, NontrivialUnit, NotInverse };

inline std::string to_string(UnitVerdict v) {
  switch (v) {
    case UnitVerdict::TrivialUnit:
      return "trivial-unit";
    case UnitVerdict::NontrivialUnit:
      return "nontrivial-unit";
    case UnitVerdict::NotInverse:
      return "not-inverse";
  }
  return "?";
}

// Checks uv = 1 (and vu = 1 when two_sided). Over F2 a unit is trivial iff
// its support is a single element.
template <CanonicalGroup G>
UnitVerdict verify_unit_pair(const G& group, const RingElt<G>& u, const RingElt<G>& v, bool two_sided = false) {
  const auto one = RingElt<G>::one(group);
  if (ring_mul(group, u, v) != one) return UnitVerdict::NotInverse;
  if (two_sided && ring_mul(group, v, u) != one) return UnitVerdict::NotInverse;
  return u.size() == 1 ? UnitVerdict::TrivialUnit : UnitVerdict::NontrivialUnit;
}

// Applies an element map (e.g. a group automorphism) to every support element.
template <CanonicalGroup G, class F>
RingElt<G> map_support(const RingElt<G>& x, F&& f) {
  std::vector<typename G::Element> terms;
  terms.reserve(x.size());
  for (const auto& g : x.support()) terms.push_back(f(g));
  return RingElt<G>(std::move(terms));
}

// Automorphism given by generator images: each support element is written as
// a word by `word_of`, substituted and re-evaluated.
template <CanonicalGroup G, class WordOf>
RingElt<G> apply_automorphism(const G& group, const std::vector<GroupWord>& images, const RingElt<G>& x,
                              WordOf&& word_of) {
  if (images.size() != group.alphabet().size()) throw std::invalid_argument("one image per generator required");
  return map_support(x, [&](const typename G::Element& g) { return evaluate(group, substitute(word_of(g), images)); });
}

// Multiplicity of each product ab, a in A, b in B.
template <CanonicalGroup G>
std::map<typename G::Element, std::size_t> product_multiplicities(const G& group,
                                                                  const std::vector<typename G::Element>& a,
                                                                  const std::vector<typename G::Element>& b) {
  std::map<typename G::Element, std::size_t> out;
  for (const auto& x : a) {
    for (const auto& y : b) ++out[group.mul(x, y)];
  }
  return out;
}

// True iff A, B are nonempty and no product occurs exactly once. Inputs are
// read as sets.
template <CanonicalGroup G>
bool upp_witness_check(const G& group, std::vector<typename G::Element> a, std::vector<typename G::Element> b) {
  for (auto* s : {&a, &b}) {
    std::sort(s->begin(), s->end());
    s->erase(std::unique(s->begin(), s->end()), s->end());
  }
  if (a.empty() || b.empty()) return false;
  for (const auto& [g, m] : product_multiplicities(group, a, b)) {
    if (m < 2) return false;
  }
  return true;
}

}  // namespace unitlab
