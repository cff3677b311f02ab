#include "pyragrow/affine.hpp"

#include <algorithm>

namespace pyragrow {

AffineSubspace affine_hull(std::vector<Vec> points) {
  if (points.empty()) throw std::invalid_argument("affine_hull of empty set");
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end(), vec_eq), points.end());

  const Vec base = points.front();
  const int n = static_cast<int>(base.size());
  Mat dirs(n, 0);
  Mat probe(n, 0);
  for (size_t i = 1; i < points.size(); ++i) {
    Vec d = points[i] - base;
    Mat cand(n, probe.cols() + 1);
    cand.leftCols(probe.cols()) = probe;
    cand.col(probe.cols()) = d;
    if (rank(cand) == cand.cols()) {
      probe = std::move(cand);
    }
  }
  return {base, probe};
}

std::optional<Vec> local_coords(const AffineSubspace& a, const Vec& x) {
  return solve_linear(a.dirs, x - a.base);
}

std::vector<std::pair<Vec, Rational>> equality_constraints(const AffineSubspace& a) {
  // Left null space of dirs: functionals vanishing on all directions.
  Mat ns = nullspace(Mat(a.dirs.transpose()));
  std::vector<std::pair<Vec, Rational>> out;
  for (int j = 0; j < ns.cols(); ++j) {
    Vec n = ns.col(j);
    Rational c = n.dot(a.base);
    canonicalize_functional(n, c);
    out.emplace_back(std::move(n), std::move(c));
  }
  return out;
}

std::pair<Vec, Rational> lift_functional(const AffineSubspace& a, const Vec& a_loc,
                                         const Rational& b_loc) {
  // Solve dirs^T alpha = a_loc; any solution restricts correctly to A.
  auto alpha = solve_linear(Mat(a.dirs.transpose()), a_loc);
  if (!alpha) throw std::logic_error("lift_functional: frame not full rank");
  Rational beta = alpha->dot(a.base) + b_loc;
  return {*alpha, beta};
}

}  // namespace pyragrow
