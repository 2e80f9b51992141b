#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <string>

#include "unitlab/group.hpp"

namespace unitlab {

// u^flip * t^shift in the infinite dihedral group <u, t | u^2, t^u = t^-1>.
struct DihedralElement {
  bool flip = false;
  Exponent shift = 0;

  auto operator<=>(const DihedralElement&) const = default;
};

DihedralElement dihedral_mul(const DihedralElement& x, const DihedralElement& y);
DihedralElement dihedral_inv(const DihedralElement& x);

// Element of P = <a, b | b^-1 a^2 b = a^-2, a^-1 b^2 a = b^-2>, stored as
// its image in the direct cube of infinite dihedral groups under
//   a -> (t, u, u),  b -> (u, t, t*u).
struct PElement {
  std::array<DihedralElement, 3> d{};

  auto operator<=>(const PElement&) const = default;
};

class PGroup {
 public:
  using Element = PElement;

  static constexpr std::size_t kA = 0;
  static constexpr std::size_t kB = 1;

  const GeneratorAlphabet& alphabet() const { return alphabet_; }
  PElement identity() const { return {}; }
  PElement generator(std::size_t i) const;
  PElement mul(const PElement& x, const PElement& y) const;
  PElement inv(const PElement& x) const;

 private:
  GeneratorAlphabet alphabet_{"a", "b"};
};

// Convenience: parse and evaluate a word over {a, b}.
PElement p_eval(std::string_view text);
PElement p_eval(const GroupWord& w);
inline PElement p_mul(const PElement& x, const PElement& y) { return PGroup{}.mul(x, y); }
inline PElement p_inv(const PElement& x) { return PGroup{}.inv(x); }

// Coset representatives of the translation subgroup <x = a^2, y = b^2, z = abab>.
enum class PCoset { One, A, B, AB };

struct PTranslationDecomposition {
  Exponent tx = 0, ty = 0, tz = 0;
  PCoset coset = PCoset::One;

  auto operator<=>(const PTranslationDecomposition&) const = default;
};

// Writes g uniquely as x^tx y^ty z^tz * rep with rep in {1, a, b, ab}.
PTranslationDecomposition p_translation_decompose(const PElement& g);
PElement p_translation_recompose(const PTranslationDecomposition& d);
// A word for g over {a, b} built from its decomposition.
GroupWord p_decomposition_word(const PElement& g);
std::string to_string(PCoset c);

enum class Tri { Yes, No, Unknown };

// Bounded bidirectional search over applications of the length-preserving
// rewrite rules of P plus free reduction. Yes: an explicit rewrite path was
// found. No: the dihedral images differ. Unknown: budget exhausted.
struct RewriteVerdict {
  Tri equal = Tri::Unknown;
  std::size_t explored = 0;
};
RewriteVerdict p_rewrite_oracle(const GroupWord& w1, const GroupWord& w2, std::size_t budget);

// True when g = h^2 for some h in P.
bool p_is_square(const PElement& g);

}  // namespace unitlab

template <>
struct std::hash<unitlab::DihedralElement> {
  std::size_t operator()(const unitlab::DihedralElement& x) const noexcept {
    return unitlab::hash_combine(x.flip ? 0x51ULL : 0x17ULL, static_cast<std::uint64_t>(x.shift));
  }
};

template <>
struct std::hash<unitlab::PElement> {
  std::size_t operator()(const unitlab::PElement& x) const noexcept {
    std::size_t h = 0;
    for (const auto& d : x.d) h = unitlab::hash_combine(h, std::hash<unitlab::DihedralElement>{}(d));
    return h;
  }
};
