#pragma once

#include "unitlab/group_ring.hpp"
#include "unitlab/h4_group.hpp"

namespace unitlab {

using H4Ring = RingElt<H4Group>;
using SRing = RingElt<SGroup>;

// u = alpha + r beta with alpha, beta in F2[S].
struct SplitElt {
  SRing alpha, beta;
  bool operator==(const SplitElt&) const = default;
};

SplitElt h4_split(const H4Ring& u);
H4Ring recompose(const SplitElt& x);

// (alpha + r beta)(alpha' + r beta') = alpha alpha' + z beta^r beta' + r(beta alpha' + alpha^r beta')
SplitElt h4_split_mul(const SplitElt& x, const SplitElt& y);

// beta^r: conjugation by r applied to every support element.
SRing conj_r(const SRing& x);

}  // namespace unitlab
