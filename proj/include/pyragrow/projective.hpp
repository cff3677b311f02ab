#pragma once

#include "pyragrow/polytope.hpp"

namespace pyragrow {

struct GrowthChain;  // extension.hpp

/// Invertible projective transformation of the n-dimensional rational chart,
/// stored as an (n+1)x(n+1) homogeneous matrix. The exceptional hyperplane
/// (sent to infinity) is cut out by the last matrix row.
class ProjectiveMap {
 public:
  explicit ProjectiveMap(Mat homogeneous);

  static ProjectiveMap identity(int dim);

  int dim() const { return static_cast<int>(m_.rows()) - 1; }
  const Mat& matrix() const { return m_; }

  /// Value of the exceptional functional at x; zero iff x maps to infinity.
  Rational exceptional_value(const Vec& x) const;

  /// Image of a finite point; throws CrossesInfinity on the exceptional set.
  Vec apply(const Vec& x) const;

  ProjectiveMap inverse() const;
  ProjectiveMap compose(const ProjectiveMap& inner) const;  // this ∘ inner
  ProjectiveMap power(int k) const;                         // k >= 0

 private:
  Mat m_;
};

/// Projective map sending Aff(f) to infinity while keeping every vertex of
/// `keep` outside f finite: homogeneous coordinates are divided by a rational
/// affine functional that vanishes exactly on the face f of keep.
ProjectiveMap map_to_infinity(const Polytope& f, const Polytope& keep);

/// Frame for the slab transformation: two parallel distinct hyperplanes H
/// (carrying the homothety center w) and Hp (fixed pointwise) inside the
/// carrier subspace. Hyperplanes are given in the carrier's local frame.
struct PsiFrame {
  AffineSubspace carrier;
  Hyperplane h;       // local to carrier
  Hyperplane hp;      // local to carrier, parallel to h, distinct
  Vec w;              // ambient point on H

  /// Ambient affine functional with value 0 on Hp and 1 on H.
  std::pair<Vec, Rational> unit_functional() const;
};

/// The unique projective map of the carrier restricting to the homothety of
/// coefficient lambda centered at w on H and to the identity on Hp.
ProjectiveMap psi_lambda(const PsiFrame& frame, const Rational& lambda);

/// Smallest k with |Psi_{2^-k}(z) - w| < tol, by exact squared comparison.
int psi_limit_check(const PsiFrame& frame, const Vec& z, const Rational& tol,
                    int cap = 256);

/// conv of the vertex images. Requires every vertex strictly on one side of
/// the exceptional hyperplane; throws CrossesInfinity otherwise.
Polytope pushforward(const ProjectiveMap& m, const Polytope& p);

GrowthChain pushforward_chain(const ProjectiveMap& m, const GrowthChain& chain);

}  // namespace pyragrow
