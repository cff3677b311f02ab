#pragma once

#include "pyragrow/polytope.hpp"

namespace pyragrow {

/// Exact squared Euclidean distance from x to P (minimum over all faces).
Rational point_polytope_sq_distance(const Vec& x, const Polytope& p);

/// Exact square of the directed Hausdorff distance sup_{x in P} d(x, Q);
/// attained at a vertex of P since Q is convex.
Rational directed_sq_distance(const Polytope& p, const Polytope& q);

/// Exact square of the Hausdorff distance.
Rational hausdorff_sq(const Polytope& p, const Polytope& q);

/// Interval of width <= tol containing d_H(P, Q); only the final square root
/// is approximated.
DistanceInterval hausdorff(const Polytope& p, const Polytope& q, const Rational& tol);

}  // namespace pyragrow
