#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "unitlab/group_ring.hpp"
#include "unitlab/p_group.hpp"

namespace unitlab {

using PRing = RingElt<PGroup>;

// Automorphism of P given by the images of a and b.
struct PAutomorphism {
  std::string name;
  std::vector<GroupWord> images;  // images[PGroup::kA], images[PGroup::kB]

  PElement apply(const PElement& g) const;
  PRing apply(const PRing& x) const;
};

// phi after psi.
PAutomorphism compose(const PAutomorphism& phi, const PAutomorphism& psi);

PAutomorphism p_identity_auto();
PAutomorphism p_alpha();  // a -> a^-1, b -> b
PAutomorphism p_beta();   // a -> a, b -> b^-1
PAutomorphism p_pi();     // a <-> b

// Agreement on every element of the ball of the given radius.
bool same_automorphism(const PAutomorphism& x, const PAutomorphism& y, std::size_t radius = 6);

class AutoGroup {
 public:
  // Closure of the generators under composition; elements compared on the
  // ball of `radius`.
  static AutoGroup generate(std::string name, const std::vector<PAutomorphism>& gens, std::size_t radius = 6);

  const std::string& name() const { return name_; }
  const std::vector<PAutomorphism>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  // table[i][j] = index of elements[i] o elements[j]
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  // Checks identity, inverses and associativity of the composition table.
  bool is_group() const;

 private:
  std::string name_;
  std::vector<PAutomorphism> elements_;
  std::vector<std::vector<std::size_t>> table_;
};

// S = <alpha, beta, pi> (order 8) and T = <pi, alpha beta> (order 4).
const AutoGroup& group_s();
const AutoGroup& group_t();

class OrbitClosureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Partition of `units` (indices) into orbits, each sorted, ordered by first
// member. Throws OrbitClosureError when an image is not in the list.
std::vector<std::vector<std::size_t>> orbits_partition(const std::vector<PRing>& units, const AutoGroup& g);

// Nontrivial u with u * pi(u) = 1.
bool is_swap_unit(const PRing& u);

struct SwapCompat {
  bool alpha_equals_beta = false;  // then alpha(u), beta(u) are swap units
  PRing alpha_image, beta_image;
};

// Throws std::invalid_argument if u is not a swap unit.
SwapCompat swap_compat_check(const PRing& u);

// Number of support elements that are squares in P.
std::size_t count_squares(const PRing& u);

}  // namespace unitlab
