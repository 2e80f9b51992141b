#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "unitlab/word.hpp"

namespace unitlab {

// Index sequences use 1-based generator numbers (x1 -> 1).
using IndexSeq = std::vector<int>;

// x_{i1} ... x_{ik} x_n^zpow in K_n = <x1..xn | x1^2 = ... = xn^2>, with
// adjacent indices distinct and i_k != n.
struct KnNormalForm {
  int n = 0;
  IndexSeq indices;
  Exponent zpow = 0;

  auto operator<=>(const KnNormalForm&) const = default;
};

KnNormalForm kn_normalize(const GroupWord& w, int n);
KnNormalForm kn_multiply(const KnNormalForm& x, const KnNormalForm& y);
GroupWord kn_to_word(const KnNormalForm& nf);

// Free product of order-2 cyclics on generators 1..r: cancel adjacent repeats.
IndexSeq c2_reduce(const IndexSeq& s);
IndexSeq c2_multiply(const IndexSeq& x, const IndexSeq& y);
// (x1 ... xr)^k as a reduced sequence.
IndexSeq c2_cycle_power(int r, Exponent k);
// Shortlex order on index sequences.
bool index_shortlex_less(const IndexSeq& x, const IndexSeq& y);

struct CosetRep {
  Exponent upow = 0;
  IndexSeq rep;
  auto operator<=>(const CosetRep&) const = default;
};

// For a reduced sequence s in A = <x1..xr | xi^2>, returns (k, rep) with
// s = (x1 ... xr)^k * rep and rep shortlex-least in the right coset U s,
// U = <x1 ... xr>.
CosetRep coset_rep(const IndexSeq& s, int r);

// Same on the factor B = <x_{r+1}..x_n | xi^2> with U = <xn ... x_{r+1}>,
// via the relabelling y_i = x_{n-i+1}.
CosetRep coset_rep_b(const IndexSeq& s, int n, int r);

struct Syllable {
  bool in_b = false;  // false: factor A on x1..xr, true: factor B on x_{r+1}..xn
  IndexSeq seq;
  auto operator<=>(const Syllable&) const = default;
};

// u s1 t1 ... sl tl in L_n = A *_U B with u = (x1 ... xr)^upow and every
// syllable a nontrivial transversal representative, alternating factors.
struct AmalgamNormalForm {
  int n = 0, r = 0;
  Exponent upow = 0;
  std::vector<Syllable> syllables;

  bool is_identity() const { return upow == 0 && syllables.empty(); }
  auto operator<=>(const AmalgamNormalForm&) const = default;
};

AmalgamNormalForm ln_normalize(const GroupWord& w, int n, int r);
std::string to_string(const AmalgamNormalForm& nf);
std::string to_string(const KnNormalForm& nf);

enum class WordProblemAnswer { Identity, NotIdentity, Unknown };

struct WordProblemResult {
  WordProblemAnswer answer = WordProblemAnswer::Unknown;
  // w = w_n^rho when the image in L_n is trivial and rho was determined.
  std::optional<Exponent> rho;
  std::size_t explored = 0;
};

// Decides whether w is trivial in H_n = F(n-1, n), n >= 4.
WordProblemResult hn_is_identity(const GroupWord& w, int n, std::size_t budget);

std::string to_string(WordProblemAnswer a);

}  // namespace unitlab
