#include "pyragrow/projective.hpp"

#include "pyragrow/errors.hpp"
#include "pyragrow/extension.hpp"

namespace pyragrow {

ProjectiveMap::ProjectiveMap(Mat homogeneous) : m_(std::move(homogeneous)) {
  if (m_.rows() != m_.cols() || m_.rows() < 2)
    throw std::invalid_argument("ProjectiveMap: matrix must be square, size >= 2");
  if (!pyragrow::inverse(m_))
    throw std::invalid_argument("ProjectiveMap: singular matrix");
}

ProjectiveMap ProjectiveMap::identity(int dim) {
  return ProjectiveMap(Mat(Mat::Identity(dim + 1, dim + 1)));
}

Rational ProjectiveMap::exceptional_value(const Vec& x) const {
  const int n = dim();
  Rational v = m_(n, n);
  for (int j = 0; j < n; ++j) v += m_(n, j) * x(j);
  return v;
}

Vec ProjectiveMap::apply(const Vec& x) const {
  const int n = dim();
  const Rational w = exceptional_value(x);
  if (w == 0) throw CrossesInfinity("point on the exceptional hyperplane");
  Vec img(n);
  for (int i = 0; i < n; ++i) {
    Rational s = m_(i, n);
    for (int j = 0; j < n; ++j) s += m_(i, j) * x(j);
    img(i) = s / w;
  }
  return img;
}

ProjectiveMap ProjectiveMap::inverse() const {
  auto inv = pyragrow::inverse(m_);
  if (!inv) throw std::logic_error("ProjectiveMap::inverse: singular");
  return ProjectiveMap(*inv);
}

ProjectiveMap ProjectiveMap::compose(const ProjectiveMap& inner) const {
  return ProjectiveMap(Mat(m_ * inner.m_));
}

ProjectiveMap ProjectiveMap::power(int k) const {
  if (k < 0) throw std::invalid_argument("ProjectiveMap::power: negative exponent");
  ProjectiveMap acc = identity(dim());
  for (int i = 0; i < k; ++i) acc = acc.compose(*this);
  return acc;
}

ProjectiveMap map_to_infinity(const Polytope& f, const Polytope& keep) {
  if (f.is_empty() || keep.is_empty())
    throw std::invalid_argument("map_to_infinity: empty input");
  const int n = keep.ambient_dim();

  // Affine functional vanishing exactly on the face f: the sum of the
  // supporting functionals of the facets of `keep` containing f, each
  // oriented to be zero on the facet and positive inside.
  Vec r = Vec::Zero(n);
  Rational c(0);
  bool any = false;
  for (size_t i = 0; i < keep.facets().size(); ++i) {
    Polytope fp = keep.facet_polytope(static_cast<int>(i));
    if (!contains_polytope(fp, f)) continue;
    HalfSpace h = keep.facet_halfspace_ambient(static_cast<int>(i));
    r -= h.a;
    c += h.b;
    any = true;
  }
  if (!any)
    throw NoSeparatingFunctional("f is not contained in any facet of keep");
  // ell(x) = r.x + c. Verify: zero exactly on f-vertices among keep's.
  for (const Vec& v : keep.vertices()) {
    const Rational val = r.dot(v) + c;
    const bool on_f = f.contains(v);
    if (on_f && val != 0)
      throw NoSeparatingFunctional("functional does not vanish on f");
    if (!on_f && val <= 0)
      throw NoSeparatingFunctional("functional not positive off f");
  }

  Mat m = Mat::Identity(n + 1, n + 1);
  if (c == 0) m.block(0, n, n, 1) = r;  // shear to keep the matrix invertible
  m.block(n, 0, 1, n) = r.transpose();
  m(n, n) = c;
  return ProjectiveMap(std::move(m));
}

std::pair<Vec, Rational> PsiFrame::unit_functional() const {
  // Local affine functional: (h.a . y - hp.b') scaled to be 0 on Hp, 1 on H.
  if (carrier.dim() < 1) throw InvalidFrame("carrier must have dimension >= 1");
  Vec na = h.a, nb = hp.a;
  // Parallel check: normals proportional within the carrier's local space.
  Mat both(2, carrier.dim());
  both.row(0) = na.transpose();
  both.row(1) = nb.transpose();
  if (rank(both) != 1) throw InvalidFrame("H and Hp are not parallel");
  // Rescale hp to share h's normal.
  Rational ratio(0);
  for (int i = 0; i < carrier.dim(); ++i)
    if (nb(i) != 0) {
      ratio = na(i) / nb(i);
      break;
    }
  if (ratio == 0) throw InvalidFrame("degenerate hyperplane normal");
  const Rational hp_b = hp.b * ratio;
  if (hp_b == h.b) throw InvalidFrame("H and Hp coincide");
  // g(y) = (na.y - hp_b) / (h.b - hp_b); lift to ambient.
  const Rational denom = h.b - hp_b;
  Vec a_loc = na / denom;
  auto w_loc = local_coords(carrier, w);
  if (!w_loc) throw InvalidFrame("w off the carrier");
  if (na.dot(*w_loc) != h.b) throw InvalidFrame("w not on H");
  return lift_functional(carrier, a_loc, Rational(hp_b / denom));
}

ProjectiveMap psi_lambda(const PsiFrame& frame, const Rational& lambda) {
  if (lambda == 0) throw InvalidFrame("lambda must be nonzero");
  auto [eta, eta0] = frame.unit_functional();  // g(x) = eta.x - eta0
  const int n = frame.carrier.ambient_dim();

  // Psi[x; 1] = [lambda x + (1 - lambda) g(x) w ; lambda + (1 - lambda) g(x)].
  Mat m(n + 1, n + 1);
  m.setZero();
  const Rational one_minus = 1 - lambda;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      m(i, j) = (i == j ? lambda : Rational(0)) + one_minus * frame.w(i) * eta(j);
    m(i, n) = -one_minus * frame.w(i) * eta0;
  }
  for (int j = 0; j < n; ++j) m(n, j) = one_minus * eta(j);
  m(n, n) = lambda - one_minus * eta0;
  return ProjectiveMap(std::move(m));
}

int psi_limit_check(const PsiFrame& frame, const Vec& z, const Rational& tol, int cap) {
  auto [eta, eta0] = frame.unit_functional();
  if (eta.dot(z) - eta0 == 0)
    throw std::invalid_argument("psi_limit_check: z lies on the fixed hyperplane");
  const Rational tol2 = tol * tol;
  Rational lambda(1);
  for (int k = 0; k <= cap; ++k) {
    const Vec img = (k == 0) ? z : psi_lambda(frame, lambda).apply(z);
    const Vec d = img - frame.w;
    if (d.dot(d) < tol2) return k;
    lambda /= 2;
  }
  throw DivergenceSuspected("psi_limit_check: no convergence within cap");
}

Polytope pushforward(const ProjectiveMap& m, const Polytope& p) {
  if (p.is_empty()) return p;
  bool pos = false, neg = false;
  for (const Vec& v : p.vertices()) {
    const Rational e = m.exceptional_value(v);
    if (e == 0) throw CrossesInfinity("vertex on the exceptional hyperplane");
    (e > 0 ? pos : neg) = true;
  }
  if (pos && neg) throw CrossesInfinity("polytope crosses the exceptional hyperplane");
  std::vector<Vec> imgs;
  imgs.reserve(p.vertices().size());
  for (const Vec& v : p.vertices()) imgs.push_back(m.apply(v));
  return conv_hull(imgs);
}

GrowthChain pushforward_chain(const ProjectiveMap& m, const GrowthChain& chain) {
  GrowthChain out;
  out.initial = pushforward(m, chain.initial);
  Polytope cur_img = out.initial;
  for (const PyramidalStep& s : chain.steps) {
    const Rational e = m.exceptional_value(s.apex);
    if (e == 0) throw CrossesInfinity("step apex on the exceptional hyperplane");
    const Vec apex_img = m.apply(s.apex);
    Polytope next_img = conv_with_point(cur_img, apex_img);
    VerificationReport rep = verify_pyramidal(cur_img, next_img);
    if (!rep.valid)
      throw StepInvalidAfterMap("pushed step failed verification: " + rep.message);
    out.steps.push_back(*rep.step);
    cur_img = std::move(next_img);
  }
  return out;
}

}  // namespace pyragrow
