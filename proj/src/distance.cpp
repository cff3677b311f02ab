#include "pyragrow/distance.hpp"

namespace pyragrow {

namespace {

Rational sq_norm(const Vec& v) { return v.dot(v); }

// d^2(x, F) for a face polytope F: the orthogonal projection onto Aff(F)
// when it lands inside F, otherwise recurse into F's facets.
Rational face_distance_sq(const Vec& x, const Polytope& f) {
  if (f.dim() == 0) return sq_norm(x - f.vertices()[0]);
  // Projection of x onto Aff(F): base + D y with D^T D y = D^T (x - base).
  const AffineSubspace& fr = f.frame();
  Mat gram = fr.dirs.transpose() * fr.dirs;
  auto y = solve_linear(gram, Vec(fr.dirs.transpose() * (x - fr.base)));
  if (!y) throw std::logic_error("face_distance_sq: singular Gram matrix");
  const Vec proj = fr.to_ambient(*y);
  if (f.contains(proj)) return sq_norm(x - proj);
  Rational best(-1);
  for (size_t i = 0; i < f.facets().size(); ++i) {
    Rational d = face_distance_sq(x, f.facet_polytope(static_cast<int>(i)));
    if (best < 0 || d < best) best = d;
  }
  return best;
}

}  // namespace

Rational point_polytope_sq_distance(const Vec& x, const Polytope& p) {
  if (p.is_empty()) throw std::invalid_argument("distance to empty polytope");
  if (p.contains(x)) return Rational(0);
  return face_distance_sq(x, p);
}

Rational directed_sq_distance(const Polytope& p, const Polytope& q) {
  Rational best(0);
  for (const Vec& v : p.vertices()) {
    Rational d = point_polytope_sq_distance(v, q);
    if (d > best) best = d;
  }
  return best;
}

Rational hausdorff_sq(const Polytope& p, const Polytope& q) {
  const Rational a = directed_sq_distance(p, q);
  const Rational b = directed_sq_distance(q, p);
  return a > b ? a : b;
}

DistanceInterval hausdorff(const Polytope& p, const Polytope& q, const Rational& tol) {
  if (p.is_empty() || q.is_empty())
    throw std::invalid_argument("hausdorff of empty polytope");
  return sqrt_interval(hausdorff_sq(p, q), tol);
}

}  // namespace pyragrow
