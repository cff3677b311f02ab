#include "pyragrow/intersect.hpp"

namespace pyragrow {

Polytope clip(const Polytope& p, const HalfSpace& h) {
  if (p.is_empty()) return p;
  const auto& vs = p.vertices();
  std::vector<Rational> val(vs.size());
  bool any_in = false, any_out = false;
  for (size_t i = 0; i < vs.size(); ++i) {
    val[i] = h.eval(vs[i]);
    (val[i] <= 0 ? any_in : any_out) = true;
  }
  if (!any_out) return p;
  if (!any_in) return Polytope();

  std::vector<Vec> keep;
  for (size_t i = 0; i < vs.size(); ++i)
    if (val[i] <= 0) keep.push_back(vs[i]);
  for (auto [i, j] : p.edges()) {
    if ((val[i] < 0 && val[j] > 0) || (val[i] > 0 && val[j] < 0)) {
      const Rational t = val[i] / (val[i] - val[j]);
      keep.push_back(vs[i] + t * (vs[j] - vs[i]));
    }
  }
  return conv_hull(keep);
}

Polytope cross_section(const Polytope& p, const Hyperplane& h) {
  Polytope q = clip(p, HalfSpace{h.a, h.b});
  return clip(q, HalfSpace{-h.a, -h.b});
}

Polytope intersect(const Polytope& p, const std::vector<HalfSpace>& halfspaces) {
  Polytope q = p;
  for (const HalfSpace& h : halfspaces) {
    q = clip(q, h);
    if (q.is_empty()) break;
  }
  return q;
}

Polytope intersect_polytopes(const Polytope& a, const Polytope& b) {
  if (a.is_empty() || b.is_empty()) return Polytope();
  Polytope q = a;
  for (const Hyperplane& e : b.affine_equalities()) {
    q = cross_section(q, e);
    if (q.is_empty()) return q;
  }
  for (size_t i = 0; i < b.facets().size(); ++i) {
    q = clip(q, b.facet_halfspace_ambient(static_cast<int>(i)));
    if (q.is_empty()) return q;
  }
  if (b.dim() == 0) {
    // No facets; the equality constraints already pin Aff(b) = {point}.
    if (!q.is_empty() && !b.contains(q.vertices()[0])) return Polytope();
  }
  return q;
}

std::vector<Vec> clip_segment(const Polytope& p, const Vec& x, const Vec& y) {
  Polytope seg = conv_hull({x, y});
  Polytope cut = intersect_polytopes(seg, p);
  return cut.vertices();
}

}  // namespace pyragrow
