#include "unitlab/p_group.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace unitlab {

DihedralElement dihedral_mul(const DihedralElement& x, const DihedralElement& y) {
  // u^f t^s u^f' t^s' = u^(f+f') t^(s*(-1)^f' + s')
  const Exponent s = y.flip ? checked_neg(x.shift) : x.shift;
  return {static_cast<bool>(x.flip ^ y.flip), checked_add(s, y.shift)};
}

DihedralElement dihedral_inv(const DihedralElement& x) {
  // (u t^s)^-1 = u t^s, (t^s)^-1 = t^-s
  return {x.flip, x.flip ? x.shift : checked_neg(x.shift)};
}

PElement PGroup::generator(std::size_t i) const {
  const DihedralElement t{false, 1}, u{true, 0};
  switch (i) {
    case kA:
      return PElement{{t, u, u}};
    case kB:
      return PElement{{u, t, dihedral_mul(t, u)}};
    default:
      throw std::out_of_range("P has two generators");
  }
}

PElement PGroup::mul(const PElement& x, const PElement& y) const {
  PElement r;
  for (int i = 0; i < 3; ++i) r.d[i] = dihedral_mul(x.d[i], y.d[i]);
  return r;
}

PElement PGroup::inv(const PElement& x) const {
  PElement r;
  for (int i = 0; i < 3; ++i) r.d[i] = dihedral_inv(x.d[i]);
  return r;
}

PElement p_eval(std::string_view text) { return evaluate(PGroup{}, text); }
PElement p_eval(const GroupWord& w) { return evaluate(PGroup{}, w); }

namespace {

PElement coset_rep(PCoset c) {
  const PGroup p;
  switch (c) {
    case PCoset::One:
      return p.identity();
    case PCoset::A:
      return p.generator(PGroup::kA);
    case PCoset::B:
      return p.generator(PGroup::kB);
    case PCoset::AB:
      return p.mul(p.generator(PGroup::kA), p.generator(PGroup::kB));
  }
  throw std::logic_error("bad coset");
}

GroupWord coset_word(PCoset c) {
  switch (c) {
    case PCoset::One:
      return {};
    case PCoset::A:
      return GroupWord::generator(PGroup::kA);
    case PCoset::B:
      return GroupWord::generator(PGroup::kB);
    case PCoset::AB:
      return GroupWord{{PGroup::kA, 1}, {PGroup::kB, 1}};
  }
  throw std::logic_error("bad coset");
}

PCoset coset_of(const PElement& g) {
  const int key = (g.d[0].flip ? 4 : 0) | (g.d[1].flip ? 2 : 0) | (g.d[2].flip ? 1 : 0);
  switch (key) {
    case 0:
      return PCoset::One;
    case 3:
      return PCoset::A;
    case 5:
      return PCoset::B;
    case 6:
      return PCoset::AB;
    default:
      throw std::invalid_argument("element is not in the image of P");
  }
}

Exponent halve(Exponent s) {
  if (s % 2 != 0) throw std::invalid_argument("element is not in the image of P");
  return s / 2;
}

}  // namespace

std::string to_string(PCoset c) {
  switch (c) {
    case PCoset::One:
      return "1";
    case PCoset::A:
      return "a";
    case PCoset::B:
      return "b";
    case PCoset::AB:
      return "ab";
  }
  return "?";
}

// In coordinates x = (t^2, 1, 1), y = (1, t^2, 1), z = abab = (1, 1, t^-2).
PTranslationDecomposition p_translation_decompose(const PElement& g) {
  const PGroup p;
  const PCoset c = coset_of(g);
  const PElement t = p.mul(g, p.inv(coset_rep(c)));
  return {halve(t.d[0].shift), halve(t.d[1].shift), checked_neg(halve(t.d[2].shift)), c};
}

PElement p_translation_recompose(const PTranslationDecomposition& d) {
  PElement t;
  t.d[0].shift = checked_mul(2, d.tx);
  t.d[1].shift = checked_mul(2, d.ty);
  t.d[2].shift = checked_mul(-2, d.tz);
  return PGroup{}.mul(t, coset_rep(d.coset));
}

GroupWord p_decomposition_word(const PElement& g) {
  const auto d = p_translation_decompose(g);
  GroupWord w;
  w.append(PGroup::kA, checked_mul(2, d.tx));
  w.append(PGroup::kB, checked_mul(2, d.ty));
  const GroupWord z{{PGroup::kA, 1}, {PGroup::kB, 1}, {PGroup::kA, 1}, {PGroup::kB, 1}};
  const GroupWord zz = d.tz < 0 ? z.inverse() : z;
  for (Exponent k = 0; k < (d.tz < 0 ? -d.tz : d.tz); ++k) w.append(zz);
  w.append(coset_word(d.coset));
  return w;
}

bool p_is_square(const PElement& g) {
  const PGroup p;
  const auto target = p_translation_decompose(g);
  if (target.coset != PCoset::One) return false;  // P/T has exponent 2
  const std::array<Exponent, 3> want{target.tx, target.ty, target.tz};
  for (PCoset c : {PCoset::One, PCoset::A, PCoset::B, PCoset::AB}) {
    // (t c)^2 is affine in the translation t; recover base + diagonal.
    const auto square_of = [&](Exponent i, Exponent j, Exponent k) {
      const PElement h = p_translation_recompose({i, j, k, c});
      const auto s = p_translation_decompose(p.mul(h, h));
      return std::array<Exponent, 3>{s.tx, s.ty, s.tz};
    };
    const auto base = square_of(0, 0, 0);
    const std::array<std::array<Exponent, 3>, 3> cols{square_of(1, 0, 0), square_of(0, 1, 0), square_of(0, 0, 1)};
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      for (int j = 0; j < 3; ++j) {
        const Exponent lij = cols[j][i] - base[i];
        if (i != j && lij != 0) throw std::logic_error("non-diagonal conjugation action on translations");
      }
      const Exponent lii = cols[i][i] - base[i];
      const Exponent rhs = want[i] - base[i];
      ok = lii == 0 ? rhs == 0 : rhs % lii == 0;
    }
    if (ok) return true;
  }
  return false;
}

namespace {

using Letters = std::vector<int>;  // +1 a, -1 a^-1, +2 b, -2 b^-1

struct Rule {
  Letters lhs, rhs;
};

Letters pow_letters(int gen, int exp) { return Letters(static_cast<std::size_t>(exp < 0 ? -exp : exp), exp < 0 ? -gen : gen); }

Letters cat(std::initializer_list<Letters> parts) {
  Letters out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

const std::vector<Rule>& rewrite_rules() {
  static const std::vector<Rule> rules = [] {
    std::vector<Rule> r;
    const auto both = [&](Letters l, Letters rr) {
      r.push_back({l, rr});
      r.push_back({rr, l});
    };
    for (int x : {1, 2}) {
      const int y = 3 - x;
      for (int e : {2, -2}) {
        for (int d : {1, -1}) both(cat({pow_letters(x, e), pow_letters(y, d)}), cat({pow_letters(y, d), pow_letters(x, -e)}));
      }
      for (int d : {1, -1}) {
        for (int g : {1, -1}) {
          both(cat({pow_letters(x, d), pow_letters(y, g), pow_letters(x, d)}),
               cat({pow_letters(x, -d), pow_letters(y, g), pow_letters(x, -d)}));
        }
      }
    }
    return r;
  }();
  return rules;
}

Letters reduce(const Letters& w) {
  Letters out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Letters to_letters(const GroupWord& w) {
  Letters out;
  for (int s : w.expanded()) out.push_back(s);  // a -> +-1, b -> +-2
  return out;
}

struct LettersHash {
  std::size_t operator()(const Letters& w) const noexcept {
    std::size_t h = w.size();
    for (int l : w) h = hash_combine(h, static_cast<std::uint64_t>(l + 8));
    return h;
  }
};

}  // namespace

RewriteVerdict p_rewrite_oracle(const GroupWord& w1, const GroupWord& w2, std::size_t budget) {
  RewriteVerdict v;
  if (p_eval(w1) != p_eval(w2)) {
    v.equal = Tri::No;
    return v;
  }
  const Letters start = reduce(to_letters(w1)), goal = reduce(to_letters(w2));
  if (start == goal) {
    v.equal = Tri::Yes;
    return v;
  }
  // side 0 grows from w1, side 1 from w2; rules are symmetric so both
  // directions use the same move set.
  std::unordered_map<Letters, int, LettersHash> seen;
  std::array<std::deque<Letters>, 2> frontier;
  seen.emplace(start, 0);
  seen.emplace(goal, 1);
  frontier[0].push_back(start);
  frontier[1].push_back(goal);
  const auto& rules = rewrite_rules();
  while ((!frontier[0].empty() || !frontier[1].empty()) && v.explored < budget) {
    const int side = frontier[0].empty() ? 1 : frontier[1].empty() ? 0 : (frontier[0].size() <= frontier[1].size() ? 0 : 1);
    const Letters cur = std::move(frontier[side].front());
    frontier[side].pop_front();
    ++v.explored;
    for (const Rule& rule : rules) {
      const std::size_t n = rule.lhs.size();
      if (cur.size() < n) continue;
      for (std::size_t pos = 0; pos + n <= cur.size(); ++pos) {
        if (!std::equal(rule.lhs.begin(), rule.lhs.end(), cur.begin() + static_cast<std::ptrdiff_t>(pos))) continue;
        Letters next(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(pos));
        next.insert(next.end(), rule.rhs.begin(), rule.rhs.end());
        next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(pos + n), cur.end());
        next = reduce(next);
        auto [it, fresh] = seen.emplace(next, side);
        if (!fresh) {
          if (it->second != side) {
            v.equal = Tri::Yes;
            return v;
          }
          continue;
        }
        frontier[side].push_back(std::move(next));
      }
    }
  }
  return v;
}

}  // namespace unitlab
