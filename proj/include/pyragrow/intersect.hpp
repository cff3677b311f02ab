#pragma once

#include "pyragrow/polytope.hpp"

namespace pyragrow {

/// P clipped by the half-space a.x <= b. Exact; the result may be empty or of
/// lower dimension. EmptyIntersection is a value, not an error.
Polytope clip(const Polytope& p, const HalfSpace& h);

/// P cut by the hyperplane a.x == b.
Polytope cross_section(const Polytope& p, const Hyperplane& h);

Polytope intersect(const Polytope& p, const std::vector<HalfSpace>& halfspaces);

/// A cap B via B's ambient H-representation.
Polytope intersect_polytopes(const Polytope& a, const Polytope& b);

/// Sub-segment of [x, y] inside P, as 0 (disjoint), 1 or 2 endpoints.
std::vector<Vec> clip_segment(const Polytope& p, const Vec& x, const Vec& y);

}  // namespace pyragrow
