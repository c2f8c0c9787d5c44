#pragma once

// Dominance order on coweights and the semi-infinite (periodic) order on
// W_aff, in two independent forms: the type-A lattice-flag picture and the
// alcove-cone picture.

#include <vector>

#include "afgr/weyl.hpp"

namespace afgr {

/// (eta_0, ..., eta_{n-1}): eta_0 = trans(x), eta_i = eta_{i-1} + e_{w(i)}.
struct LatticeFlag {
  std::vector<Coweight> etas;
  bool operator==(const LatticeFlag&) const = default;
};

/// b - a is a nonnegative integer combination of e_i - e_{i+1}.
bool dominance_leq(const Coweight& a, const Coweight& b);

/// The rational analogue: d lies in the closed cone spanned by the positive
/// simple coroots.
bool in_positive_coroot_cone(const MomentPoint& d);

LatticeFlag flag_of(const AffineWeylElt& x);

/// Closure order of U_w = w U w^{-1} orbits, via flags. For w = w_0 this is
/// componentwise dominance of the flags; other w reduce to w_0 by left
/// translation with v^{-1}, v = w w_0.
bool semiinf_leq_lattice(const AffineWeylElt& x, const AffineWeylElt& y, const Perm& w);

/// Same order via moment images: Phi(x) - Phi(y) lies in the closed cone
/// w.(positive coroot cone). For w = w_0 that is the negative-root cone.
bool semiinf_leq_cone(const AffineWeylElt& x, const AffineWeylElt& y, const Perm& w);

}  // namespace afgr
