#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "pyragrow/rational.hpp"

namespace pyragrow {

using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

bool vec_eq(const Vec& a, const Vec& b);
bool lex_less(const Vec& a, const Vec& b);

/// Rank of A by exact Gaussian elimination (first-nonzero pivoting).
int rank(Mat a);

/// Rank of the difference vectors p_i - p_0, i.e. dim of the affine hull.
int affine_rank(const std::vector<Vec>& points);

/// One solution of A x = b, if consistent.
std::optional<Vec> solve_linear(Mat a, Vec b);

/// Basis of the right null space of A, as matrix columns (possibly 0 cols).
Mat nullspace(Mat a);

/// Exact inverse; nullopt when singular.
std::optional<Mat> inverse(const Mat& a);

/// Scale (a, b) so that all entries are integers with content 1. Orientation
/// (the sign) is preserved; the zero functional is left untouched.
void canonicalize_functional(Vec& a, Rational& b);

/// Integer-primitive vector with the same direction.
Vec primitive_direction(Vec d);

}  // namespace pyragrow
