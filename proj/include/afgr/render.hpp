#pragma once

#include <string>

#include "afgr/polytope.hpp"

namespace afgr {

/// SVG 1.1 drawing of a rank-2 or rank-3 polytope: simple coroots at 120
/// degrees, 60px per unit, lattice points of the hull as dots. Throws
/// DomainError for rank > 3.
std::string render_svg(const Polytope& P);

}  // namespace afgr
