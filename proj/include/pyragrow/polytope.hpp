#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pyragrow/affine.hpp"

namespace pyragrow {

/// Closed half-space a.x <= b (or hyperplane a.x == b) in canonical integer
/// form. Which of the two is meant is contextual.
struct HalfSpace {
  Vec a;
  Rational b;

  Rational eval(const Vec& x) const { return a.dot(x) - b; }
  static HalfSpace canonical(Vec a, Rational b) {
    canonicalize_functional(a, b);
    return {std::move(a), std::move(b)};
  }
};

using Hyperplane = HalfSpace;

enum class Location { Interior, Boundary, Outside };

/// Facet of a polytope, in the local coordinates of its affine-hull frame:
/// supporting half-space normal.y <= offset, tight exactly on `verts`.
struct Facet {
  Vec normal;        // dim(P)-dimensional, canonical integer form
  Rational offset;
  std::vector<int> verts;  // sorted vertex indices
};

/// Convex polytope with exact rational V- and H-representation. Vertices are
/// extreme points in lexicographic order; facets live in the local frame of
/// the affine hull. Instances are immutable after construction.
class Polytope {
 public:
  Polytope() = default;  // empty polytope, dim() == -1

  static Polytope hull(const std::vector<Vec>& points);

  bool is_empty() const { return verts_.empty(); }
  int ambient_dim() const { return ambient_; }
  int dim() const { return dim_; }
  const AffineSubspace& frame() const { return frame_; }
  const std::vector<Vec>& vertices() const { return verts_; }
  const std::vector<Vec>& vertices_local() const { return verts_local_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const Vec& vertex(int i) const { return verts_[i]; }

  Location locate(const Vec& x) const;
  bool contains(const Vec& x) const;

  /// Supporting half-space of facet i as an ambient functional. Tight on the
  /// facet, satisfied by the whole polytope; constant transverse to Aff(P).
  HalfSpace facet_halfspace_ambient(int i) const;

  /// Ambient equalities cutting out Aff(P) (empty when full-dimensional).
  std::vector<Hyperplane> affine_equalities() const;

  /// Vertex-index pairs forming edges (1-faces).
  std::vector<std::pair<int, int>> edges() const;

  /// The facet as a polytope of its own.
  Polytope facet_polytope(int i) const;

  Vec barycenter() const;

  bool same_vertex_set(const Polytope& o) const;

  /// Index of the facet whose vertex set equals the given polytope, or -1.
  int find_facet(const Polytope& f) const;

  int vertex_index(const Vec& v) const;  // -1 if absent

  std::string describe() const;  // short debug string

 private:
  int ambient_ = 0;
  int dim_ = -1;
  AffineSubspace frame_;
  std::vector<Vec> verts_;
  std::vector<Vec> verts_local_;
  std::vector<Facet> facets_;

  friend void validate(const Polytope& p);
};

Polytope conv_hull(const std::vector<Vec>& points);

/// Hull of the union of vertex sets.
Polytope conv_union(const Polytope& p, const Polytope& q);
Polytope conv_with_point(const Polytope& p, const Vec& x);

/// True when every vertex of inner lies in outer.
bool contains_polytope(const Polytope& outer, const Polytope& inner);

/// Throws std::logic_error when a structural invariant fails.
void validate(const Polytope& p);

}  // namespace pyragrow
