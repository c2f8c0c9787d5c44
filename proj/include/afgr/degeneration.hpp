#pragma once

// Combinatorial shadow of the central degeneration Gr x G/B ~> Fl: where
// fixed points, torus-invariant curves, root-subgroup orbits and orbit closures
// go in the special fiber.

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "afgr/polytope.hpp"
#include "afgr/weyl.hpp"

namespace afgr {

struct P1Limit {
  std::array<AffineWeylElt, 3> fixed_points;  // (b1,e), (b1,s_a), (b2,e)
  std::array<std::pair<AffineWeylElt, AffineWeylElt>, 2> edges;
  /// Affine roots of the reflections realizing the two edges.
  std::array<AffineRoot, 2> edge_roots;
};

struct Component {
  AffineWeylElt anchor;
  Polytope polytope;
};

struct UpperBound {
  Int count = 0;
  bool cap_exceeded = false;  // count is then a partial count
  Int candidates = 0;
  Int subsets_visited = 0;
};

struct LimitReport {
  Polytope polytope;
  Int lower_bound = 0;
  std::optional<UpperBound> upper_bound;
  std::vector<Component> components;
};

AffineWeylElt degenerate_fixed_point(const Coweight& beta);

/// b1 - b2 must be m.alpha^vee for a positive root alpha and m >= 1.
P1Limit degenerate_p1(const Coweight& b1, const Coweight& b2);

AffineRoot degenerate_root_subgroup(const AffineRoot& gamma);

std::pair<AffineWeylElt, std::vector<AffineRoot>> degenerate_product_orbit(
    const Coweight& mu, const std::vector<AffineRoot>& gammas);

/// Anchor of the limit of the U_w orbit through t^mu.
AffineWeylElt degenerate_semiinfinite(const Perm& w, const Coweight& mu);
/// Membership of y in the closure of that limit.
bool in_semiinfinite_limit(const AffineWeylElt& y, const Perm& w, const Coweight& mu);

struct AdmissibleSet {
  std::vector<AffineWeylElt> elements;  // sorted by (length, value)
  std::vector<AffineWeylElt> maximal;
};
AdmissibleSet admissible_set(const Coweight& lambda);

/// Convex hull of moment images of all elements <= x.
Polytope iwahori_orbit_polytope(const AffineWeylElt& x);

LimitReport go_orbit_limit(const Coweight& lambda);

/// Hull of moment_image((mu_i, e)) over the lattice vertices mu_i of P.
Polytope limit_polytope(const Polytope& P);

Int component_lower_bound(const Polytope& P);

struct Sl2MvLimit {
  Int d = 0;
  std::vector<AffineWeylElt> fixed_points;  // ordered along the line
  std::map<Int, Int> cells_by_dim;          // dimension -> number of cells
  std::vector<Component> components;
};
Sl2MvLimit sl2_mv_limit(const Coweight& lambda, const Coweight& mu);

struct Sl2IwahoriLimit {
  Int d = 0;
  std::array<Component, 2> components;  // translation anchor, Iwahori word anchor
};
Sl2IwahoriLimit sl2_iwahori_limit(const Coweight& gamma, bool opposite);

}  // namespace afgr
