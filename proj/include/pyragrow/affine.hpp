#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pyragrow/linalg.hpp"

namespace pyragrow {

/// Finite-dimensional affine subspace: base point plus linearly independent
/// direction columns. dim() == number of directions.
struct AffineSubspace {
  Vec base;
  Mat dirs;  // ambient_dim x dim, full column rank

  int ambient_dim() const { return static_cast<int>(base.size()); }
  int dim() const { return static_cast<int>(dirs.cols()); }

  Vec to_ambient(const Vec& local) const { return base + dirs * local; }
};

/// Minimal affine subspace containing the points; base and directions are
/// chosen greedily from the lexicographically sorted input, so equal point
/// sets yield identical frames.
AffineSubspace affine_hull(std::vector<Vec> points);

/// Local coordinates of x in A, or nullopt when x is off the subspace.
std::optional<Vec> local_coords(const AffineSubspace& a, const Vec& x);

/// Ambient equality constraints cutting out A: pairs (n, c) with n.x == c
/// exactly on A. Empty for a full-dimensional subspace.
std::vector<std::pair<Vec, Rational>> equality_constraints(const AffineSubspace& a);

/// Ambient functional agreeing with the local functional a_loc.y (+) on A:
/// returns (alpha, beta) with alpha.x - beta == a_loc.local(x) - b_loc for
/// all x in A.
std::pair<Vec, Rational> lift_functional(const AffineSubspace& a, const Vec& a_loc,
                                         const Rational& b_loc);

}  // namespace pyragrow
