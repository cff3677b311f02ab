#pragma once

#include "pyragrow/polytope.hpp"

namespace pyragrow {

/// Pointed polyhedral cone apex + R_+{generators}, with a cached ambient
/// H-representation (half-spaces through the apex plus carrier equalities).
struct Cone {
  Vec apex;
  std::vector<Vec> generators;  // primitive extreme-ray directions, lex order
  std::vector<HalfSpace> halfspaces;
  std::vector<Hyperplane> equalities;

  bool contains_point(const Vec& x) const;
  bool contains_direction(const Vec& d) const { return contains_point(Vec(apex + d)); }
};

/// R_+(P - w) + w for a vertex w of P; generators are the extreme rays only.
Cone corner_cone(const Polytope& p, const Vec& w);

/// Mutual containment of generators (and equal apexes).
bool cone_equal(const Cone& a, const Cone& b);

/// Bounded cross-section C cap H with one vertex per extreme ray. Throws
/// NotTraversing (see errors.hpp) when a ray is parallel to or inside H.
Polytope cone_cross_section(const Cone& c, const Hyperplane& h);

}  // namespace pyragrow
