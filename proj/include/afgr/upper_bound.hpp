#pragma once

// Upper bound on the number of irreducible components of a limit: convex
// polytopes Q with vertices at moment images of fixed points inside P~ such
// that (i) coroot-parallel vertex pairs are related by an affine reflection,
// and (ii) every vertex has reflection_count(Q, .) >= d.

#include <vector>

#include "afgr/degeneration.hpp"

namespace afgr {

/// Fixed points x with moment_image(x) in Ptilde and reflection_count >= d
/// there, sorted by moment image.
std::vector<AffineWeylElt> upper_bound_candidates(const Polytope& Ptilde, Int d);

/// Depth-first enumeration over subsets in convex position, parallel over
/// the smallest vertex. `cap` bounds the total number of subsets visited; the
/// result is deterministic regardless of thread count.
UpperBound component_upper_bound(const Polytope& P, Int d, Int cap);

/// Reference implementation: tests every subset of the candidates.
UpperBound component_upper_bound_serial(const Polytope& P, Int d, Int cap);

/// Count of ordered pairs from `elements` on which the lattice and cone forms
/// of the semi-infinite order for w disagree.
Int order_disagreements(const std::vector<AffineWeylElt>& elements, const Perm& w);
Int order_disagreements_serial(const std::vector<AffineWeylElt>& elements, const Perm& w);

}  // namespace afgr
