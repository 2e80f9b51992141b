#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "unitlab/checked.hpp"

namespace unitlab {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ordered list of generator symbols. Index i in the list is generator i.
class GeneratorAlphabet {
 public:
  GeneratorAlphabet() = default;
  GeneratorAlphabet(std::initializer_list<std::string> names);
  explicit GeneratorAlphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  // Index of `symbol`, or size() when absent.
  std::size_t find(std::string_view symbol) const;

  bool operator==(const GeneratorAlphabet&) const = default;

 private:
  std::vector<std::string> names_;
};

// "x1".."xn"
GeneratorAlphabet numbered_alphabet(std::string_view prefix, std::size_t n);

// A freely reduced word: runs of (generator, nonzero exponent) with distinct
// generators in adjacent runs.
class GroupWord {
 public:
  struct Letter {
    std::size_t gen = 0;
    Exponent exp = 0;
    auto operator<=>(const Letter&) const = default;
  };

  GroupWord() = default;
  GroupWord(std::initializer_list<Letter> letters);

  static GroupWord generator(std::size_t gen, Exponent exp = 1);

  // Appends gen^exp and reduces against the tail.
  void append(std::size_t gen, Exponent exp);
  void append(const GroupWord& w);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  // Number of unit letters, i.e. sum of |exp|.
  std::size_t length() const;

  GroupWord inverse() const;
  GroupWord operator*(const GroupWord& rhs) const;

  // One entry per unit letter: +/- (gen + 1).
  std::vector<int> expanded() const;
  static GroupWord from_expanded(const std::vector<int>& signed_gens);

  auto operator<=>(const GroupWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

GroupWord parse_word(std::string_view text, const GeneratorAlphabet& alphabet);
std::string to_string(const GroupWord& w, const GeneratorAlphabet& alphabet);

// Replaces each generator i by images[i].
GroupWord substitute(const GroupWord& w, const std::vector<GroupWord>& images);

// Length-lexicographic comparison on expanded letters, ordering letters as
// g0 < g0^-1 < g1 < g1^-1 < ...
bool shortlex_less(const GroupWord& x, const GroupWord& y);

}  // namespace unitlab
