#include "afgr/orders.hpp"

#include "afgr/error.hpp"

namespace afgr {

bool dominance_leq(const Coweight& a, const Coweight& b) {
  require_same_rank(a.rank(), b.rank(), "dominance order");
  Int prefix = 0;
  for (int i = 0; i < a.rank(); ++i) {
    prefix += b[i] - a[i];
    if (prefix < 0) return false;
  }
  return prefix == 0;
}

bool in_positive_coroot_cone(const MomentPoint& d) {
  // Coefficients in the simple-coroot basis are the prefix sums; the basis is
  // linearly independent on the sum-zero plane, so the solution is unique.
  Rational prefix = 0;
  for (int i = 0; i < d.rank(); ++i) {
    prefix += d[i];
    if (prefix < 0) return false;
  }
  return prefix == 0;
}

LatticeFlag flag_of(const AffineWeylElt& x) {
  LatticeFlag f;
  Coweight eta = x.trans();
  f.etas.push_back(eta);
  for (int i = 0; i + 1 < x.rank(); ++i) {
    eta[x.fin()(i)] += 1;
    f.etas.push_back(eta);
  }
  return f;
}

namespace {

AffineWeylElt untwist(const AffineWeylElt& x, const Perm& w) {
  const Perm v = w * Perm::longest(w.rank());
  return AffineWeylElt::finite(v.inverse()) * x;
}

}  // namespace

bool semiinf_leq_lattice(const AffineWeylElt& x, const AffineWeylElt& y, const Perm& w) {
  require_same_rank(x.rank(), y.rank(), "semi-infinite order");
  require_same_rank(x.rank(), w.rank(), "semi-infinite order");
  const LatticeFlag fx = flag_of(untwist(x, w));
  const LatticeFlag fy = flag_of(untwist(y, w));
  for (std::size_t i = 0; i < fx.etas.size(); ++i)
    if (!dominance_leq(fx.etas[i], fy.etas[i])) return false;
  return true;
}

bool semiinf_leq_cone(const AffineWeylElt& x, const AffineWeylElt& y, const Perm& w) {
  require_same_rank(x.rank(), y.rank(), "semi-infinite order");
  require_same_rank(x.rank(), w.rank(), "semi-infinite order");
  const MomentPoint d = moment_image(x) - moment_image(y);
  return in_positive_coroot_cone(w.inverse().act(d));
}

}  // namespace afgr
