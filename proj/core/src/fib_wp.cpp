#include "unitlab/fib_wp.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "unitlab/h4_group.hpp"

namespace unitlab {

namespace {

Exponent floor_div2(Exponent e) { return e >= 0 ? e / 2 : -((-e + 1) / 2); }

}  // namespace

KnNormalForm kn_normalize(const GroupWord& w, int n) {
  if (n < 2) throw std::invalid_argument("K_n requires n >= 2");
  KnNormalForm nf;
  nf.n = n;
  Exponent central = 0;  // power of c = x_i^2, which is central
  for (const auto& l : w.letters()) {
    if (l.gen >= static_cast<std::size_t>(n)) throw std::invalid_argument("generator outside x1..xn");
    const Exponent q = floor_div2(l.exp);
    central = checked_add(central, q);
    if (l.exp - 2 * q == 0) continue;
    const int idx = static_cast<int>(l.gen) + 1;
    if (!nf.indices.empty() && nf.indices.back() == idx) {
      nf.indices.pop_back();
      central = checked_add(central, 1);
    } else {
      nf.indices.push_back(idx);
    }
  }
  nf.zpow = checked_mul(2, central);
  if (!nf.indices.empty() && nf.indices.back() == n) {
    nf.indices.pop_back();
    nf.zpow = checked_add(nf.zpow, 1);
  }
  return nf;
}

GroupWord kn_to_word(const KnNormalForm& nf) {
  GroupWord w;
  for (int i : nf.indices) w.append(static_cast<std::size_t>(i - 1), 1);
  w.append(static_cast<std::size_t>(nf.n - 1), nf.zpow);
  return w;
}

KnNormalForm kn_multiply(const KnNormalForm& x, const KnNormalForm& y) {
  if (x.n != y.n) throw std::invalid_argument("K_n normal forms for different n");
  return kn_normalize(kn_to_word(x) * kn_to_word(y), x.n);
}

IndexSeq c2_reduce(const IndexSeq& s) {
  IndexSeq out;
  for (int i : s) {
    if (!out.empty() && out.back() == i)
      out.pop_back();
    else
      out.push_back(i);
  }
  return out;
}

IndexSeq c2_multiply(const IndexSeq& x, const IndexSeq& y) {
  IndexSeq out = x;
  for (int i : y) {
    if (!out.empty() && out.back() == i)
      out.pop_back();
    else
      out.push_back(i);
  }
  return out;
}

IndexSeq c2_cycle_power(int r, Exponent k) {
  IndexSeq out;
  const Exponent n = k < 0 ? -k : k;
  out.reserve(static_cast<std::size_t>(n * r));
  for (Exponent j = 0; j < n; ++j) {
    for (int i = 1; i <= r; ++i) out.push_back(k > 0 ? i : r + 1 - i);
  }
  return out;
}

bool index_shortlex_less(const IndexSeq& x, const IndexSeq& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

CosetRep coset_rep(const IndexSeq& s, int r) {
  if (r < 2) throw std::invalid_argument("coset_rep requires r >= 2");
  const IndexSeq red = c2_reduce(s);
  // |p^k s| >= |k| r - |s|, so only |k| <= 2|s|/r + 1 can beat k = 0.
  const Exponent bound = static_cast<Exponent>(2 * red.size() / static_cast<std::size_t>(r)) + 1;
  CosetRep best{0, red};
  for (Exponent k = -bound; k <= bound; ++k) {
    IndexSeq cand = c2_multiply(c2_cycle_power(r, k), red);
    if (index_shortlex_less(cand, best.rep)) best = {-k, std::move(cand)};
  }
  return best;
}

namespace {

IndexSeq relabel_b(const IndexSeq& s, int n) {
  IndexSeq out;
  out.reserve(s.size());
  for (int i : s) out.push_back(n - i + 1);
  return out;
}

bool index_in_b(int idx, int r) { return idx > r; }

// Generator of U expressed in a factor, to the power k.
IndexSeq u_power(bool in_b, int n, int r, Exponent k) {
  if (!in_b) return c2_cycle_power(r, k);
  return relabel_b(c2_cycle_power(n - r, k), n);
}

CosetRep side_coset_rep(bool in_b, const IndexSeq& s, int n, int r) {
  return in_b ? coset_rep_b(s, n, r) : coset_rep(s, r);
}

void merge_adjacent(std::vector<Syllable>& syl) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Syllable> out;
    for (auto& s : syl) {
      if (s.seq.empty()) {
        changed = true;
        continue;
      }
      if (!out.empty() && out.back().in_b == s.in_b) {
        out.back().seq = c2_multiply(out.back().seq, s.seq);
        changed = true;
        continue;
      }
      out.push_back(std::move(s));
    }
    syl = std::move(out);
  }
}

}  // namespace

CosetRep coset_rep_b(const IndexSeq& s, int n, int r) {
  CosetRep c = coset_rep(relabel_b(s, n), n - r);
  c.rep = relabel_b(c.rep, n);
  return c;
}

AmalgamNormalForm ln_normalize(const GroupWord& w, int n, int r) {
  if (r < 2 || r > n - 2) throw std::invalid_argument("L_n amalgam requires 2 <= r <= n-2");
  AmalgamNormalForm nf;
  nf.n = n;
  nf.r = r;

  // x_i^2 = 1 in L_n: keep odd powers only, grouped by factor.
  std::vector<Syllable> syl;
  for (const auto& l : w.letters()) {
    if (l.gen >= static_cast<std::size_t>(n)) throw std::invalid_argument("generator outside x1..xn");
    if (l.exp % 2 == 0) continue;
    const int idx = static_cast<int>(l.gen) + 1;
    const bool b = index_in_b(idx, r);
    if (!syl.empty() && syl.back().in_b == b) {
      syl.back().seq = c2_multiply(syl.back().seq, {idx});
      if (syl.back().seq.empty()) syl.pop_back();
    } else {
      syl.push_back({b, {idx}});
    }
  }
  merge_adjacent(syl);

  // Move syllables lying in U into the neighbouring factor until the
  // sequence is reduced.
  for (bool changed = true; changed && syl.size() > 1;) {
    changed = false;
    for (std::size_t i = 0; i < syl.size(); ++i) {
      const CosetRep c = side_coset_rep(syl[i].in_b, syl[i].seq, n, r);
      if (!c.rep.empty()) continue;
      syl[i] = {!syl[i].in_b, u_power(!syl[i].in_b, n, r, c.upow)};
      merge_adjacent(syl);
      changed = true;
      break;
    }
  }

  // Right-to-left pass pushing U-parts to the front.
  Exponent carry = 0;
  for (std::size_t i = syl.size(); i-- > 0;) {
    const IndexSeq g = c2_multiply(syl[i].seq, u_power(syl[i].in_b, n, r, carry));
    CosetRep c = side_coset_rep(syl[i].in_b, g, n, r);
    syl[i].seq = std::move(c.rep);
    carry = c.upow;
  }
  std::erase_if(syl, [](const Syllable& s) { return s.seq.empty(); });
  nf.upow = carry;
  nf.syllables = std::move(syl);
  return nf;
}

std::string to_string(const KnNormalForm& nf) {
  std::string out = "[";
  for (std::size_t i = 0; i < nf.indices.size(); ++i) out += (i ? "," : "") + std::to_string(nf.indices[i]);
  return out + "] x" + std::to_string(nf.n) + "^" + std::to_string(nf.zpow);
}

std::string to_string(const AmalgamNormalForm& nf) {
  std::string out = "U^" + std::to_string(nf.upow);
  for (const auto& s : nf.syllables) {
    out += s.in_b ? " B[" : " A[";
    for (std::size_t i = 0; i < s.seq.size(); ++i) out += (i ? "," : "") + std::to_string(s.seq[i]);
    out += "]";
  }
  return out;
}

std::string to_string(WordProblemAnswer a) {
  switch (a) {
    case WordProblemAnswer::Identity:
      return "identity";
    case WordProblemAnswer::NotIdentity:
      return "not-identity";
    case WordProblemAnswer::Unknown:
      return "unknown";
  }
  return "?";
}

namespace {

// Best-first search over K_n normal forms, inserting relators of F(n-1, n)
// and their inverses, until the index part is empty. Then w = x_n^zpow with
// zpow = 2 rho.
std::optional<Exponent> search_rho(const GroupWord& w, int n, std::size_t budget, std::size_t& explored) {
  const FibPresentation fib = fib_presentation(n - 1, n);
  std::vector<GroupWord> moves;
  for (const auto& rel : fib.relators) {
    moves.push_back(rel);
    moves.push_back(rel.inverse());
  }
  using Key = std::pair<IndexSeq, Exponent>;
  std::set<Key> seen;
  struct Node {
    std::size_t weight;
    std::size_t order;
    KnNormalForm nf;
    bool operator>(const Node& o) const { return std::tie(weight, order) > std::tie(o.weight, o.order); }
  };
  std::priority_queue<Node, std::vector<Node>, std::greater<>> queue;
  std::size_t order = 0;
  KnNormalForm start = kn_normalize(w, n);
  seen.insert({start.indices, start.zpow});
  queue.push({start.indices.size(), order++, start});
  while (!queue.empty() && explored < budget) {
    Node cur = queue.top();
    queue.pop();
    ++explored;
    if (cur.nf.indices.empty()) {
      if (cur.nf.zpow % 2 != 0) throw std::logic_error("odd central power with trivial L_n image");
      return cur.nf.zpow / 2;
    }
    const auto& idx = cur.nf.indices;
    for (std::size_t pos = 0; pos <= idx.size(); ++pos) {
      GroupWord prefix, suffix;
      for (std::size_t i = 0; i < pos; ++i) prefix.append(static_cast<std::size_t>(idx[i] - 1), 1);
      for (std::size_t i = pos; i < idx.size(); ++i) suffix.append(static_cast<std::size_t>(idx[i] - 1), 1);
      suffix.append(static_cast<std::size_t>(n - 1), cur.nf.zpow);
      for (const auto& m : moves) {
        KnNormalForm next = kn_normalize(prefix * m * suffix, n);
        if (!seen.insert({next.indices, next.zpow}).second) continue;
        queue.push({next.indices.size(), order++, std::move(next)});
      }
    }
  }
  return std::nullopt;
}

}  // namespace

WordProblemResult hn_is_identity(const GroupWord& w, int n, std::size_t budget) {
  if (n < 4) throw std::invalid_argument("H_n word problem requires n >= 4");
  WordProblemResult res;
  const AmalgamNormalForm image = ln_normalize(w, n, n / 2);
  if (!image.is_identity()) {
    res.answer = WordProblemAnswer::NotIdentity;
    return res;
  }
  if (n == 4) {
    // w_4 = x1 x2 x3 x4 maps to z in the polycyclic form.
    const H4Element g = psi_eval(w);
    if (g.w || g.s != 0 || g.t != 0) throw std::logic_error("trivial L_4 image but psi image outside <z>");
    res.rho = g.u;
    res.answer = g.u == 0 ? WordProblemAnswer::Identity : WordProblemAnswer::NotIdentity;
    return res;
  }
  res.rho = search_rho(w, n, budget, res.explored);
  if (!res.rho) return res;
  const Exponent rho = *res.rho;
  if (rho == 0) {
    res.answer = WordProblemAnswer::Identity;
  } else if (rho % (n - 2) != 0) {
    // w_n has order exactly n-2 in the abelianisation.
    res.answer = WordProblemAnswer::NotIdentity;
  } else if (n % 2 == 0) {
    // Torsion-free for even n and x1^2 = w_n with x1 != 1.
    res.answer = WordProblemAnswer::NotIdentity;
  }
  return res;
}

}  // namespace unitlab
