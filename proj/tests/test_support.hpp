#pragma once

// Shared helpers for the test suites: fixture builders, a deterministic RNG
// over small rationals, and independent oracles (exact LP feasibility and
// brute-force facet enumeration) that bypass the production hull code paths.

#include <cstdint>
#include <random>
#include <set>
#include <variant>
#include <vector>

#include "pyragrow/intersect.hpp"
#include "pyragrow/polytope.hpp"

namespace pyragrow {

using Coord = std::variant<int, const char*>;

inline Vec pt(std::initializer_list<Coord> cs) {
  Vec v(static_cast<Eigen::Index>(cs.size()));
  Eigen::Index i = 0;
  for (const Coord& c : cs) {
    if (std::holds_alternative<int>(c))
      v(i++) = Rational(std::get<int>(c));
    else
      v(i++) = parse_rational(std::get<const char*>(c));
  }
  return v;
}

struct TestRng {
  std::mt19937_64 eng;
  explicit TestRng(uint64_t seed) : eng(seed) {}

  uint64_t next() { return eng(); }

  Rational rational(int bound) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    return Rational(num(eng)) / Rational(den(eng));
  }

  Vec rational_point(int dim, int bound) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v(i) = rational(bound);
    return v;
  }

  Polytope random_polytope(int dim, int bound, int npoints) {
    std::vector<Vec> pts;
    for (int i = 0; i < npoints; ++i) pts.push_back(rational_point(dim, bound));
    return conv_hull(pts);
  }
};

/// Exact feasibility of x in conv(points) via a phase-1 simplex with Bland's
/// rule. Independent of the kernel's hull/facet machinery.
inline bool point_in_hull_oracle(const Vec& x, const std::vector<Vec>& points) {
  if (points.empty()) return false;
  const int d = static_cast<int>(x.size());
  const int n = static_cast<int>(points.size());
  const int rows = d + 1;

  // Tableau columns: n structural lambdas + rows artificials | rhs.
  // Flip rows so every rhs is nonnegative, then minimize artificial sum.
  Mat t(rows, n + rows + 1);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < n; ++c) t(r, c) = (r < d) ? points[c](r) : Rational(1);
    for (int c = 0; c < rows; ++c) t(r, n + c) = (r == c) ? 1 : 0;
    t(r, n + rows) = (r < d) ? x(r) : Rational(1);
    if (t(r, n + rows) < 0)
      for (int c = 0; c <= n + rows; ++c) t(r, c) = -t(r, c);
  }
  std::vector<int> basis(rows);
  for (int r = 0; r < rows; ++r) basis[r] = n + r;

  auto reduced_cost = [&](int col) {
    // Objective: sum of artificial variables. c_j - z_j with c_j = [j >= n].
    Rational z(0);
    for (int r = 0; r < rows; ++r)
      if (basis[r] >= n) z += t(r, col);
    Rational c = (col >= n) ? Rational(1) : Rational(0);
    return c - z;
  };

  for (int iter = 0; iter < 100000; ++iter) {
    int enter = -1;
    for (int c = 0; c < n + rows; ++c)
      if (reduced_cost(c) < 0) {
        enter = c;  // Bland: first improving column
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rational best_ratio(0);
    for (int r = 0; r < rows; ++r) {
      if (t(r, enter) <= 0) continue;
      Rational ratio = t(r, n + rows) / t(r, enter);
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave]))
        leave = r, best_ratio = ratio;
    }
    if (leave < 0) return false;  // unbounded phase-1: cannot happen
    const Rational piv = t(leave, enter);
    for (int c = 0; c <= n + rows; ++c) t(leave, c) /= piv;
    for (int r = 0; r < rows; ++r) {
      if (r == leave || t(r, enter) == 0) continue;
      const Rational f = t(r, enter);
      for (int c = 0; c <= n + rows; ++c) t(r, c) -= f * t(leave, c);
    }
    basis[leave] = enter;
  }

  Rational objective(0);
  for (int r = 0; r < rows; ++r)
    if (basis[r] >= n) objective += t(r, n + rows);
  return objective == 0;
}

namespace oracle_detail {

// Triangulation of a chart polytope by coning its first vertex over the
// recursively triangulated facets not containing it.
inline void simplices_of(const Polytope& c, std::vector<std::vector<Vec>>& out) {
  if (c.dim() <= 0) {
    out.push_back({c.vertices()[0]});
    return;
  }
  const Vec& apex = c.vertices()[0];
  for (size_t i = 0; i < c.facets().size(); ++i) {
    if (std::binary_search(c.facets()[i].verts.begin(), c.facets()[i].verts.end(), 0)) continue;
    std::vector<std::vector<Vec>> sub;
    simplices_of(c.facet_polytope(static_cast<int>(i)), sub);
    for (auto& s : sub) {
      s.push_back(apex);
      out.push_back(std::move(s));
    }
  }
}

}  // namespace oracle_detail

/// k-volume of X measured in the chart given by `frame` (k = frame dim).
/// Comparable across polytopes sharing the frame; zero when X is thin.
inline Rational chart_volume(const Polytope& x, const AffineSubspace& frame) {
  const int k = frame.dim();
  if (x.is_empty() || k == 0) return Rational(0);
  std::vector<Vec> chart_pts;
  for (const Vec& v : x.vertices()) {
    auto l = local_coords(frame, v);
    if (!l) throw std::logic_error("chart_volume: point off frame");
    chart_pts.push_back(*l);
  }
  Polytope c = conv_hull(chart_pts);
  if (c.dim() < k) return Rational(0);
  std::vector<std::vector<Vec>> simplices;
  oracle_detail::simplices_of(c, simplices);
  Rational total(0);
  Rational kfact(1);
  for (int i = 2; i <= k; ++i) kfact *= i;
  for (const auto& s : simplices) {
    Mat d(k, k);
    for (int i = 0; i < k; ++i) d.col(i) = s[i] - s[k];
    // Exact determinant by elimination.
    Rational det(1);
    Mat m = d;
    for (int col = 0, row = 0; col < k && row < k; ++col, ++row) {
      int p = -1;
      for (int r = row; r < k; ++r)
        if (m(r, col) != 0) { p = r; break; }
      if (p < 0) { det = 0; break; }
      if (p != row) { m.row(p).swap(m.row(row)); det = -det; }
      det *= m(row, col);
      const Rational inv = Rational(1) / m(row, col);
      for (int c2 = col; c2 < k; ++c2) m(row, c2) *= inv;
      for (int r = row + 1; r < k; ++r) {
        if (m(r, col) == 0) continue;
        const Rational f = m(r, col);
        for (int c2 = col; c2 < k; ++c2) m(r, c2) -= f * m(row, c2);
      }
    }
    total += (det < 0 ? -det : det) / kfact;
  }
  return total;
}

/// Brute-force Def-1.1 oracle: computes Delta = closure(Q \ P) through
/// conv/intersection plus exact volumes, then tests "Delta is a pyramid and
/// Delta cap P is a facet of Delta". Independent of verify_pyramidal's
/// combinatorial path.
inline bool pyramidal_oracle(const Polytope& p, const Polytope& q) {
  if (p.is_empty() || q.is_empty()) return false;
  if (!contains_polytope(q, p)) return false;
  if (p.same_vertex_set(q)) return false;

  Polytope delta;
  if (q.dim() > p.dim()) {
    delta = q;  // P is thin in Q, so closure(Q \ P) = Q
  } else {
    // Pieces of Q beyond each facet of P tile closure(Q \ P).
    std::vector<Vec> cloud;
    for (size_t i = 0; i < p.facets().size(); ++i) {
      HalfSpace h = p.facet_halfspace_ambient(static_cast<int>(i));
      Polytope piece = clip(q, HalfSpace{-h.a, -h.b});  // side beyond the facet
      if (piece.dim() != q.dim()) continue;
      for (const Vec& v : piece.vertices()) cloud.push_back(v);
    }
    if (cloud.empty()) return false;
    delta = conv_hull(cloud);
    const Rational vol_delta = chart_volume(delta, q.frame());
    const Rational vol_diff =
        chart_volume(q, q.frame()) - chart_volume(p, q.frame());
    if (vol_delta != vol_diff) return false;  // the difference is not convex
  }

  // Delta must be a pyramid: some facet contains all vertices but one.
  bool pyramid = false;
  for (const Facet& f : delta.facets())
    if (f.verts.size() + 1 == delta.vertices().size()) pyramid = true;
  if (!pyramid) return false;

  // Delta cap P must be a facet of Delta.
  Polytope base = intersect_polytopes(delta, p);
  if (base.is_empty()) return false;
  return delta.find_facet(base) >= 0;
}

/// All supporting hyperplanes spanned by point triples (3D): the facet
/// planes, by exhaustive enumeration.
inline std::set<std::vector<Rational>> brute_force_facets(const std::vector<Vec>& pts) {
  std::set<std::vector<Rational>> planes;
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec u = pts[j] - pts[i], v = pts[k] - pts[i];
        Vec nrm(3);
        nrm << u(1) * v(2) - u(2) * v(1), u(2) * v(0) - u(0) * v(2), u(0) * v(1) - u(1) * v(0);
        if (nrm.isZero()) continue;
        Rational off = nrm.dot(pts[i]);
        bool pos = false, neg = false;
        for (const Vec& p : pts) {
          const Rational s = nrm.dot(p) - off;
          if (s > 0) pos = true;
          if (s < 0) neg = true;
        }
        if (pos && neg) continue;
        if (pos) {
          nrm = -nrm;
          off = -off;
        }
        canonicalize_functional(nrm, off);
        planes.insert({nrm(0), nrm(1), nrm(2), off});
      }
  return planes;
}

}  // namespace pyragrow
