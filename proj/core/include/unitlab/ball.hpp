#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "unitlab/group.hpp"

namespace unitlab {

// Ball of a given radius around the identity in the Cayley graph for a
// symmetric generating set. Elements are stored in (radius, shortlex word)
// order; index 0 is the identity.
template <CanonicalGroup G>
class CayleyBall {
 public:
  using Element = typename G::Element;

  std::size_t size() const { return elements_.size(); }
  std::size_t radius() const { return radius_; }
  const std::vector<Element>& elements() const { return elements_; }
  const Element& element(std::size_t i) const { return elements_.at(i); }
  const GroupWord& word_of(std::size_t i) const { return words_.at(i); }
  std::size_t radius_of(std::size_t i) const { return radii_.at(i); }
  const std::vector<std::size_t>& generators() const { return generators_; }

  std::optional<std::size_t> index_of(const Element& g) const {
    auto it = index_.find(g);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const Element& g) const { return index_.count(g) != 0; }

  // ball_sizes()[r] = |B_r| for r = 0..radius.
  std::vector<std::size_t> ball_sizes() const {
    std::vector<std::size_t> out;
    std::size_t acc = 0;
    for (std::size_t s : sphere_sizes()) out.push_back(acc += s);
    return out;
  }
  std::vector<std::size_t> sphere_sizes() const {
    std::vector<std::size_t> out(radius_ + 1, 0);
    for (std::size_t r : radii_) ++out[r];
    return out;
  }

  // Builds the ball by breadth-first search. `generators` lists alphabet
  // indices; each is used with exponent +1 and -1.
  static CayleyBall build(const G& group, const std::vector<std::size_t>& generators, std::size_t radius) {
    CayleyBall ball;
    ball.radius_ = radius;
    ball.generators_ = generators;
    std::vector<std::size_t> gens = generators;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (std::size_t g : gens) {
      if (g >= group.alphabet().size()) throw std::invalid_argument("generator index out of range");
    }
    // Letters in shortlex order: g0, g0^-1, g1, g1^-1, ...
    struct Step {
      std::size_t gen;
      Exponent exp;
      Element value;
    };
    std::vector<Step> steps;
    for (std::size_t g : gens) {
      const Element x = group.generator(g);
      steps.push_back({g, 1, x});
      steps.push_back({g, -1, group.inv(x)});
    }
    ball.add(group.identity(), GroupWord{}, 0);
    std::size_t begin = 0;
    for (std::size_t r = 1; r <= radius; ++r) {
      const std::size_t end = ball.elements_.size();
      for (std::size_t i = begin; i < end; ++i) {
        for (const Step& s : steps) {
          Element h = group.mul(ball.elements_[i], s.value);
          if (ball.index_.count(h)) continue;
          GroupWord w = ball.words_[i];
          w.append(s.gen, s.exp);
          ball.add(std::move(h), std::move(w), r);
        }
      }
      begin = end;
      if (begin == ball.elements_.size()) break;
    }
    return ball;
  }

  static CayleyBall build(const G& group, std::size_t radius) {
    std::vector<std::size_t> all(group.alphabet().size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return build(group, all, radius);
  }

 private:
  void add(Element g, GroupWord w, std::size_t r) {
    index_.emplace(g, elements_.size());
    elements_.push_back(std::move(g));
    words_.push_back(std::move(w));
    radii_.push_back(r);
  }

  std::size_t radius_ = 0;
  std::vector<std::size_t> generators_;
  std::vector<Element> elements_;
  std::vector<GroupWord> words_;
  std::vector<std::size_t> radii_;
  std::unordered_map<Element, std::size_t> index_;
};

}  // namespace unitlab
