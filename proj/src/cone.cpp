#include "pyragrow/cone.hpp"

#include <algorithm>

#include "pyragrow/errors.hpp"

namespace pyragrow {

bool Cone::contains_point(const Vec& x) const {
  for (const Hyperplane& e : equalities)
    if (e.eval(x) != 0) return false;
  for (const HalfSpace& h : halfspaces)
    if (h.eval(x) > 0) return false;
  return true;
}

Cone corner_cone(const Polytope& p, const Vec& w) {
  const int wi = p.vertex_index(w);
  if (wi < 0) throw std::invalid_argument("corner_cone: w is not a vertex");

  Cone c;
  c.apex = w;
  c.equalities = p.affine_equalities();

  // Half-spaces: the facets tight at w, re-anchored at the apex.
  for (size_t i = 0; i < p.facets().size(); ++i) {
    const Facet& f = p.facets()[i];
    if (!std::binary_search(f.verts.begin(), f.verts.end(), wi)) continue;
    c.halfspaces.push_back(p.facet_halfspace_ambient(static_cast<int>(i)));
  }

  // Candidate generators u - w, pruned to the extreme rays: a direction is
  // extreme iff its tight constraints have rank ambient - 1.
  std::vector<Vec> cands;
  for (size_t i = 0; i < p.vertices().size(); ++i) {
    if (static_cast<int>(i) == wi) continue;
    Vec g = primitive_direction(Vec(p.vertex(static_cast<int>(i)) - w));
    bool dup = false;
    for (const Vec& o : cands)
      if (vec_eq(o, g)) dup = true;
    if (!dup) cands.push_back(std::move(g));
  }
  const int n = p.ambient_dim();
  for (const Vec& g : cands) {
    Mat tight(0, n);
    for (const Hyperplane& e : c.equalities) {
      tight.conservativeResize(tight.rows() + 1, n);
      tight.row(tight.rows() - 1) = e.a.transpose();
    }
    for (const HalfSpace& h : c.halfspaces)
      if (h.a.dot(g) == 0) {
        tight.conservativeResize(tight.rows() + 1, n);
        tight.row(tight.rows() - 1) = h.a.transpose();
      }
    if (rank(tight) == n - 1) c.generators.push_back(g);
  }
  std::sort(c.generators.begin(), c.generators.end(), lex_less);
  return c;
}

bool cone_equal(const Cone& a, const Cone& b) {
  if (!vec_eq(a.apex, b.apex)) return false;
  for (const Vec& g : a.generators)
    if (!b.contains_direction(g)) return false;
  for (const Vec& g : b.generators)
    if (!a.contains_direction(g)) return false;
  return true;
}

Polytope cone_cross_section(const Cone& c, const Hyperplane& h) {
  if (h.eval(c.apex) == 0)
    throw NotTraversing("hyperplane passes through the apex");
  std::vector<Vec> pts;
  for (const Vec& g : c.generators) {
    const Rational dg = h.a.dot(g);
    if (dg == 0) throw NotTraversing("ray parallel to the hyperplane");
    const Rational t = -h.eval(c.apex) / dg;
    if (t <= 0) throw NotTraversing("ray leaves the hyperplane behind the apex");
    pts.push_back(c.apex + t * g);
  }
  if (pts.empty()) throw NotTraversing("cone has no generators");
  return conv_hull(pts);
}

}  // namespace pyragrow
