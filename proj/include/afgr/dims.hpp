#pragma once

#include <optional>
#include <string>

#include "afgr/weyl.hpp"

namespace afgr {

struct DimResult {
  std::optional<Int> value;  // nullopt means the intersection is empty
  bool equidimensional = false;
  std::string kind;
  std::string note;

  bool empty() const { return !value.has_value(); }
};

/// Sum of simple-coroot coefficients; lambda must have coordinate sum 0.
Int height(const Coweight& lambda);

/// dim G/P_{lambda_dom} = #{alpha > 0 : <lambda_dom, alpha> > 0}.
Int partial_flag_dim(const Coweight& lambda);

/// Minimal-length w with lambda = w . lambda_dom.
Perm minimal_coset_rep(const Coweight& lambda);

Int iwahori_dim_gr(const Coweight& lambda);
Int iwahori_dim_fl(const AffineWeylElt& x);

/// dim of Gr^{lambda-Iwahori orbit} intersected with S_{w0}^mu (empty unless
/// lambda <= mu <= lambda_dom in dominance order).
DimResult gr_intersection_dim(const Coweight& lambda, const Coweight& mu);

/// Upper bound for the Fl intersection indexed by x = (w.lambda_dom, w'),
/// y = (mu, w'').
DimResult fl_intersection_bound(const AffineWeylElt& x, const AffineWeylElt& y);

}  // namespace afgr
