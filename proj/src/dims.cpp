#include "afgr/dims.hpp"

#include <algorithm>
#include <numeric>

#include "afgr/error.hpp"
#include "afgr/orders.hpp"

namespace afgr {

Int height(const Coweight& lambda) {
  if (!lambda.is_sl()) throw DomainError("height: " + lambda.str() + " is not in the coroot lattice");
  // lambda = sum c_i alpha_i^vee with c_i the prefix sums.
  Int h = 0, prefix = 0;
  for (int i = 0; i + 1 < lambda.rank(); ++i) {
    prefix += lambda[i];
    h += prefix;
  }
  return h;
}

Int partial_flag_dim(const Coweight& lambda) {
  const Coweight dom = lambda.dominant();
  Int d = 0;
  for (const Root& a : positive_roots(lambda.rank()))
    if (a.pair(dom) > 0) ++d;
  return d;
}

Perm minimal_coset_rep(const Coweight& lambda) {
  const int n = lambda.rank();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return lambda[a] > lambda[b]; });
  return Perm(order);
}

Int iwahori_dim_gr(const Coweight& lambda) {
  require_sl(lambda, "iwahori_dim_gr");
  const Coweight dom = lambda.dominant();
  return minimal_coset_rep(lambda).length() + 2 * height(dom) - partial_flag_dim(dom);
}

Int iwahori_dim_fl(const AffineWeylElt& x) { return length(x); }

DimResult gr_intersection_dim(const Coweight& lambda, const Coweight& mu) {
  require_same_rank(lambda.rank(), mu.rank(), "gr_intersection_dim");
  require_sl(lambda, "gr_intersection_dim");
  require_sl(mu, "gr_intersection_dim");
  DimResult r;
  r.kind = "gr_intersection";
  const Coweight dom = lambda.dominant();
  if (!dominance_leq(lambda, mu) || !dominance_leq(mu, dom)) {
    r.note = "lambda <= mu <= lambda_dom fails";
    return r;
  }
  r.value = height(dom + mu) - partial_flag_dim(dom) + minimal_coset_rep(lambda).length();
  r.equidimensional = true;
  r.note = "w normalized to the minimal coset representative";
  return r;
}

DimResult fl_intersection_bound(const AffineWeylElt& x, const AffineWeylElt& y) {
  require_same_rank(x.rank(), y.rank(), "fl_intersection_bound");
  DimResult gr = gr_intersection_dim(x.trans(), y.trans());
  DimResult r;
  r.kind = "fl_intersection_upper_bound";
  if (gr.empty()) {
    r.note = "Gr part empty";
    return r;
  }
  const Perm& w1 = x.fin();
  const Perm& w2 = y.fin();
  const int n = x.rank();
  const Int num_pos = static_cast<Int>(n) * (n - 1) / 2;
  if (w1 == w2) {
    r.value = *gr.value + num_pos - w1.length();
  } else if (finite_bruhat_leq(w2, w1)) {
    r.value = *gr.value + w1.length() - w2.length();
  } else if (finite_bruhat_leq(w1, w2)) {
    r.note = "w' < w''";
    return r;
  } else {
    r.value = *gr.value + num_pos;
    r.note = "w', w'' incomparable: weaker bound Gr part + dim G/B";
  }
  return r;
}

}  // namespace afgr
