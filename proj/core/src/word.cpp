#include "unitlab/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <unordered_set>

namespace unitlab {

namespace {

bool valid_symbol(std::string_view s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '^' || c == '*' || c == '-';
  });
}

int letter_rank(std::size_t gen, Exponent sign) { return static_cast<int>(2 * gen + (sign < 0 ? 1 : 0)); }

}  // namespace

GeneratorAlphabet::GeneratorAlphabet(std::initializer_list<std::string> names)
    : GeneratorAlphabet(std::vector<std::string>(names)) {}

GeneratorAlphabet::GeneratorAlphabet(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_symbol(n)) throw std::invalid_argument("invalid generator symbol '" + n + "'");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate generator symbol '" + n + "'");
  }
}

std::size_t GeneratorAlphabet::find(std::string_view symbol) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == symbol) return i;
  }
  return names_.size();
}

GeneratorAlphabet numbered_alphabet(std::string_view prefix, std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return GeneratorAlphabet(std::move(names));
}

GroupWord::GroupWord(std::initializer_list<Letter> letters) {
  for (const auto& l : letters) append(l.gen, l.exp);
}

GroupWord GroupWord::generator(std::size_t gen, Exponent exp) {
  GroupWord w;
  w.append(gen, exp);
  return w;
}

void GroupWord::append(std::size_t gen, Exponent exp) {
  if (exp == 0) return;
  if (!letters_.empty() && letters_.back().gen == gen) {
    letters_.back().exp = checked_add(letters_.back().exp, exp);
    if (letters_.back().exp == 0) letters_.pop_back();
    return;
  }
  letters_.push_back({gen, exp});
}

void GroupWord::append(const GroupWord& w) {
  for (const auto& l : w.letters_) append(l.gen, l.exp);
}

std::size_t GroupWord::length() const {
  std::size_t n = 0;
  for (const auto& l : letters_) n += static_cast<std::size_t>(l.exp < 0 ? -l.exp : l.exp);
  return n;
}

GroupWord GroupWord::inverse() const {
  GroupWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back({it->gen, checked_neg(it->exp)});
  return w;
}

GroupWord GroupWord::operator*(const GroupWord& rhs) const {
  GroupWord w = *this;
  w.append(rhs);
  return w;
}

std::vector<int> GroupWord::expanded() const {
  std::vector<int> out;
  out.reserve(length());
  for (const auto& l : letters_) {
    const int g = static_cast<int>(l.gen) + 1;
    const Exponent n = l.exp < 0 ? -l.exp : l.exp;
    for (Exponent k = 0; k < n; ++k) out.push_back(l.exp < 0 ? -g : g);
  }
  return out;
}

GroupWord GroupWord::from_expanded(const std::vector<int>& signed_gens) {
  GroupWord w;
  for (int s : signed_gens) w.append(static_cast<std::size_t>(std::abs(s) - 1), s < 0 ? -1 : 1);
  return w;
}

GroupWord parse_word(std::string_view text, const GeneratorAlphabet& alphabet) {
  GroupWord w;
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool expect_term = true;
  while (i < text.size()) {
    if (!expect_term) {
      // separator: '*' or whitespace (already skipped)
      if (text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw ParseError("dangling '*' in word '" + std::string(text) + "'");
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '^' && text[i] != '*') ++i;
    const std::string_view name = text.substr(start, i - start);
    if (name.empty()) throw ParseError("expected generator symbol at offset " + std::to_string(start));
    Exponent exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t estart = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      std::string_view digits = text.substr(estart, i - estart);
      if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exp);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty() || digits == "-")
        throw ParseError("malformed exponent in word '" + std::string(text) + "'");
    }
    const std::size_t gen = alphabet.find(name);
    if (gen == alphabet.size()) {
      if (name != "1") throw ParseError("unknown generator '" + std::string(name) + "'");
      // "1" denotes the identity; any exponent leaves it unchanged.
    } else {
      w.append(gen, exp);
    }
    skip_ws();
    expect_term = false;
  }
  return w;
}

std::string to_string(const GroupWord& w, const GeneratorAlphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += '*';
    out += alphabet.name(l.gen);
    if (l.exp != 1) {
      out += '^';
      out += std::to_string(l.exp);
    }
  }
  return out;
}

GroupWord substitute(const GroupWord& w, const std::vector<GroupWord>& images) {
  GroupWord out;
  for (const auto& l : w.letters()) {
    const GroupWord& img = images.at(l.gen);
    const GroupWord piece = l.exp < 0 ? img.inverse() : img;
    const Exponent n = l.exp < 0 ? -l.exp : l.exp;
    for (Exponent k = 0; k < n; ++k) out.append(piece);
  }
  return out;
}

bool shortlex_less(const GroupWord& x, const GroupWord& y) {
  const std::size_t lx = x.length(), ly = y.length();
  if (lx != ly) return lx < ly;
  const auto ex = x.expanded(), ey = y.expanded();
  for (std::size_t i = 0; i < ex.size(); ++i) {
    const int rx = letter_rank(static_cast<std::size_t>(std::abs(ex[i]) - 1), ex[i]);
    const int ry = letter_rank(static_cast<std::size_t>(std::abs(ey[i]) - 1), ey[i]);
    if (rx != ry) return rx < ry;
  }
  return false;
}

}  // namespace unitlab
