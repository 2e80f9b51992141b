#include "unitlab/h4_split.hpp"

namespace unitlab {

SplitElt h4_split(const H4Ring& u) {
  std::vector<SElement> alpha, beta;
  for (const auto& g : u.support()) (g.w ? beta : alpha).push_back(g.s_part());
  return {SRing(std::move(alpha)), SRing(std::move(beta))};
}

H4Ring recompose(const SplitElt& x) {
  std::vector<H4Element> terms;
  for (const auto& s : x.alpha.support()) terms.push_back(H4Element::from(false, s));
  for (const auto& s : x.beta.support()) terms.push_back(H4Element::from(true, s));
  return H4Ring(std::move(terms));
}

SRing conj_r(const SRing& x) {
  return map_support(x, [](const SElement& s) { return s_conj_r(s); });
}

SplitElt h4_split_mul(const SplitElt& x, const SplitElt& y) {
  const SGroup s;
  const SRing z = SRing::single({0, 0, 1});
  const SRing alpha = ring_add(ring_mul(s, x.alpha, y.alpha), ring_mul(s, z, ring_mul(s, conj_r(x.beta), y.beta)));
  const SRing beta = ring_add(ring_mul(s, x.beta, y.alpha), ring_mul(s, conj_r(x.alpha), y.beta));
  return {alpha, beta};
}

}  // namespace unitlab
