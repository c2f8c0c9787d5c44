#pragma once

// Exact convex geometry in the coweight space. Ranks n <= 3 use planar
// algorithms on the first n-1 coordinates; 4 <= n <= 6 fall back to exact LP.

#include <optional>
#include <utility>
#include <vector>

#include "afgr/error.hpp"
#include "afgr/lp.hpp"
#include "afgr/weyl.hpp"

namespace afgr {

inline constexpr int kMaxPolytopeRank = 6;

class Polytope {
 public:
  Polytope() = default;
  /// Trusts that `vertices` is irredundant and sorted; use convex_hull otherwise.
  static Polytope from_vertices_unchecked(std::vector<MomentPoint> vertices);

  int rank() const { return vertices_.empty() ? 0 : vertices_.front().rank(); }
  const std::vector<MomentPoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  /// Affine dimension.
  int dim() const;
  bool has_vertex(const MomentPoint& p) const;
  /// Lattice vertices, if every vertex is integral.
  std::optional<std::vector<Coweight>> lattice_vertices() const;
  Polytope translated(const MomentPoint& by) const;

  bool operator==(const Polytope&) const = default;

 private:
  std::vector<MomentPoint> vertices_;
};

struct Subdivision {
  std::vector<Polytope> cells;
};

/// Irredundant vertex list in lexicographic order.
Polytope convex_hull(const std::vector<MomentPoint>& points);
Polytope convex_hull(const std::vector<Coweight>& points);

bool contains(const Polytope& P, const MomentPoint& p);
/// LP-only membership; used to cross-check the planar path.
bool contains_lp(const Polytope& P, const MomentPoint& p);

/// Planar polygons only: vertices in counter-clockwise order (in the first two
/// coordinates), starting from the lexicographically smallest.
std::vector<MomentPoint> boundary_cycle(const Polytope& P);

/// Range [lo, hi] of t with p + t*dir in P; empty if p + t*dir misses P.
std::optional<std::pair<Rational, Rational>> line_extent(const Polytope& P,
                                                         const MomentPoint& p,
                                                         const MomentPoint& dir);

/// (v + coroot lattice) inside P, sorted.
std::vector<Coweight> coset_lattice_points(const Polytope& P, const Coweight& v);

/// #{(gamma, m) : gamma a root, m >= 1, v + m gamma^vee in P}; v must be a vertex.
Int root_direction_count(const Polytope& P, const Coweight& v);

/// The same count at an arbitrary point: affine reflections s with s.p != p
/// and s.p in P. Agrees with root_direction_count at lattice points.
Int reflection_count(const Polytope& P, const MomentPoint& p);

/// Thrown by dimension_estimate when counts differ between vertices.
class VertexCountMismatch : public DomainError {
 public:
  VertexCountMismatch(std::vector<std::pair<Coweight, Int>> counts);
  const std::vector<std::pair<Coweight, Int>>& counts() const { return counts_; }

 private:
  std::vector<std::pair<Coweight, Int>> counts_;
};

/// Common root_direction_count over all (lattice) vertices.
Int dimension_estimate(const Polytope& P);

Polytope minkowski_sum(const Polytope& P, const Polytope& Q);
Polytope scaled(const Polytope& P, Int k);

/// c1 [0,alpha] + c2 [0,beta] + c3 conv{0,alpha,theta} + c4 conv{0,beta,theta}.
/// Throws DomainError for negative coefficients and for c1*c2 > 0, where the
/// sum is not an MV polytope (its vertex counts disagree).
Polytope mv_polytope_sl3(Int c1, Int c2, Int c3, Int c4);
/// The sum without the MV restriction.
Polytope prime_sum_sl3(Int c1, Int c2, Int c3, Int c4);

/// Unique dominance-maximal and -minimal vertices, if they exist.
std::optional<std::pair<Coweight, Coweight>> top_bottom(const Polytope& P);

struct RegularityResult {
  bool regular = false;
  /// Heights on `points` when regular.
  std::vector<MomentPoint> points;
  std::vector<Rational> heights;
  /// When not regular: the standard-form system and a Farkas vector y proving
  /// it has no solution with margin 1.
  RatMatrix system;
  std::vector<Rational> rhs;
  std::vector<Rational> certificate;
};

/// Throws DomainError unless the cells tile P face-to-face (planar only).
void validate_tiling(const Polytope& P, const Subdivision& S);

/// Is S induced by the lower faces of some lifting of its vertices?
RegularityResult check_regular_subdivision(const Polytope& P, const Subdivision& S);

}  // namespace afgr
