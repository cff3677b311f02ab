#pragma once

#include "pyragrow/polytope.hpp"

namespace pyragrow {

/// Facets of a target polytope visible from a viewpoint, with visibility not
/// obstructed by a reference polytope. Facets are indices into target.facets().
struct VisibleFacetSet {
  Vec viewpoint;
  std::vector<int> facets;  // ascending
};

/// Facets of P strictly beyond-visible from v within Aff(P). Empty when v is
/// in P. Throws std::invalid_argument when v is off Aff(P).
std::vector<int> visible_facets(const Polytope& p, const Vec& v);

/// Unobstructed visibility: facet s of pp counts iff conv(s, {v}) meets ref
/// exactly in s. By convention the set is empty when v lies in ref.
VisibleFacetSet unobstructed_visible_facets(const Polytope& pp, const Vec& v,
                                            const Polytope& ref);

/// The visible part of the boundary, as the list of unobstructed facets.
VisibleFacetSet visible_boundary(const Polytope& pp, const Vec& v, const Polytope& ref);

}  // namespace pyragrow
