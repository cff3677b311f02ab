#include "pyragrow/visibility.hpp"

#include "pyragrow/intersect.hpp"

namespace pyragrow {

std::vector<int> visible_facets(const Polytope& p, const Vec& v) {
  if (p.is_empty()) throw std::invalid_argument("visible_facets: empty polytope");
  auto l = local_coords(p.frame(), v);
  if (!l) throw std::invalid_argument("visible_facets: viewpoint off Aff(P)");
  std::vector<int> out;
  for (size_t i = 0; i < p.facets().size(); ++i) {
    const Facet& f = p.facets()[i];
    if (f.normal.dot(*l) > f.offset) out.push_back(static_cast<int>(i));
  }
  return out;
}

VisibleFacetSet unobstructed_visible_facets(const Polytope& pp, const Vec& v,
                                            const Polytope& ref) {
  VisibleFacetSet out;
  out.viewpoint = v;
  if (ref.contains(v)) return out;  // degenerate viewpoint: nothing visible
  for (size_t i = 0; i < pp.facets().size(); ++i) {
    Polytope s = pp.facet_polytope(static_cast<int>(i));
    Polytope cone = conv_with_point(s, v);
    Polytope cut = intersect_polytopes(cone, ref);
    if (!cut.is_empty() && cut.same_vertex_set(s))
      out.facets.push_back(static_cast<int>(i));
  }
  return out;
}

VisibleFacetSet visible_boundary(const Polytope& pp, const Vec& v, const Polytope& ref) {
  return unobstructed_visible_facets(pp, v, ref);
}

}  // namespace pyragrow
