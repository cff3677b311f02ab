#include "pyragrow/extension.hpp"

#include <algorithm>

#include "pyragrow/errors.hpp"
#include "pyragrow/visibility.hpp"

namespace pyragrow {

std::vector<Polytope> GrowthChain::intermediates() const {
  std::vector<Polytope> out;
  out.push_back(initial);
  for (const PyramidalStep& s : steps) out.push_back(conv_with_point(out.back(), s.apex));
  return out;
}

Polytope GrowthChain::final_polytope() const {
  Polytope cur = initial;
  for (const PyramidalStep& s : steps) cur = conv_with_point(cur, s.apex);
  return cur;
}

const QuasiWitness* QuasiChain::witness_for(int index) const {
  for (const QuasiWitness& w : witnesses)
    if (w.index == index) return &w;
  return nullptr;
}

VerificationReport verify_pyramidal(const Polytope& p, const Polytope& q) {
  VerificationReport rep;
  if (p.is_empty() || q.is_empty()) {
    rep.message = "empty polytope";
    return rep;
  }
  if (p.ambient_dim() != q.ambient_dim()) {
    rep.message = "ambient dimension mismatch";
    return rep;
  }

  // (i) Exactly one new vertex, and it lies outside P.
  std::vector<Vec> fresh;
  for (const Vec& v : q.vertices())
    if (p.vertex_index(v) < 0) fresh.push_back(v);
  if (fresh.size() != 1) {
    rep.message = "vert(Q) \\ vert(P) is not a single point";
    return rep;
  }
  const Vec v = fresh[0];
  if (p.contains(v)) {
    rep.message = "the new point lies in P";
    return rep;
  }

  // (ii) Q is exactly conv(P, v).
  Polytope probe = conv_with_point(p, v);
  if (!probe.same_vertex_set(q)) {
    rep.message = "Q != conv(P, v)";
    return rep;
  }

  // (iii) Pyramid over P, or stacking onto the unique visible facet.
  PyramidalStep step;
  step.apex = v;
  if (!local_coords(p.frame(), v)) {
    step.kind = StepKind::PyramidOver;
  } else {
    if (p.dim() == 0) {
      rep.message = "apex in Aff(P) of a point";
      return rep;
    }
    auto vis = visible_facets(p, v);
    if (vis.size() != 1) {
      rep.message = "apex sees " + std::to_string(vis.size()) + " facets of P";
      return rep;
    }
    step.kind = StepKind::StackOnFacet;
    step.facet = p.facets()[vis[0]].verts;
  }
  rep.valid = true;
  rep.message = "ok";
  rep.step = std::move(step);
  rep.final_polytope = std::move(probe);
  return rep;
}

Polytope apply_step(const Polytope& p, const PyramidalStep& s) {
  Polytope q = conv_with_point(p, s.apex);
  VerificationReport rep = verify_pyramidal(p, q);
  if (!rep.valid) throw InvalidStep(rep.message);
  if (rep.step->kind != s.kind) throw InvalidStep("recorded step kind does not match");
  if (s.kind == StepKind::StackOnFacet && rep.step->facet != s.facet)
    throw InvalidStep("recorded facet does not match the visible facet");
  return q;
}

VerificationReport verify_chain(const GrowthChain& chain) {
  VerificationReport rep;
  Polytope cur = chain.initial;
  if (cur.is_empty()) {
    rep.message = "empty initial polytope";
    return rep;
  }
  for (size_t i = 0; i < chain.steps.size(); ++i) {
    Polytope next = conv_with_point(cur, chain.steps[i].apex);
    VerificationReport one = verify_pyramidal(cur, next);
    if (!one.valid) {
      rep.message = "step " + std::to_string(i) + " invalid";
      rep.diagnostics.push_back({static_cast<int>(i), one.message});
      return rep;
    }
    if (one.step->kind != chain.steps[i].kind ||
        (one.step->kind == StepKind::StackOnFacet && one.step->facet != chain.steps[i].facet)) {
      rep.message = "step " + std::to_string(i) + " does not match its certificate";
      rep.diagnostics.push_back({static_cast<int>(i), "certificate mismatch"});
      return rep;
    }
    cur = std::move(next);
  }
  rep.valid = true;
  rep.message = "ok";
  rep.final_polytope = std::move(cur);
  return rep;
}

DistanceInterval defect(const QuasiChain& qc, const Rational& tol, DefectRule rule) {
  std::vector<Rational> squares;
  for (size_t i = 1; i < qc.polytopes.size(); ++i) {
    const QuasiWitness* w = qc.witness_for(static_cast<int>(i));
    const Polytope& prev = qc.polytopes[i - 1];
    const Polytope& wit = w ? w->polytope : prev;
    // Only strict witnesses P'_i strictly inside P_{i-1} contribute.
    if (wit.same_vertex_set(prev)) continue;
    const Polytope& other =
        (rule == DefectRule::DistanceToStep) ? qc.polytopes[i] : prev;
    squares.push_back(hausdorff_sq(wit, other));
  }
  if (squares.empty()) return DistanceInterval::zero();
  const Rational per_term = tol / Rational(static_cast<int>(squares.size()));
  DistanceInterval total = DistanceInterval::zero();
  for (const Rational& s : squares) total = total + sqrt_interval(s, per_term);
  return total;
}

VerificationReport verify_quasi(const QuasiChain& qc, const Rational& defect_tol,
                                DefectRule rule) {
  VerificationReport rep;
  if (qc.polytopes.empty()) {
    rep.message = "empty chain";
    return rep;
  }
  const Polytope& p0 = qc.polytopes.front();
  for (size_t i = 1; i < qc.polytopes.size(); ++i) {
    const int idx = static_cast<int>(i);
    const Polytope& prev = qc.polytopes[i - 1];
    const Polytope& cur = qc.polytopes[i];
    auto fail = [&](const std::string& why) {
      rep.diagnostics.push_back({idx, why});
      rep.message = "step " + std::to_string(idx) + ": " + why;
    };
    if (!contains_polytope(cur, prev)) {
      fail("P_{i-1} not contained in P_i");
      return rep;
    }
    const QuasiWitness* w = qc.witness_for(idx);
    const Polytope& wit = w ? w->polytope : prev;
    if (!contains_polytope(wit, p0)) {
      fail("witness does not contain P_0");
      return rep;
    }
    if (!contains_polytope(prev, wit)) {
      fail("witness not contained in P_{i-1}");
      return rep;
    }
    VerificationReport one = verify_pyramidal(wit, cur);
    if (!one.valid) {
      fail("witness extension not pyramidal: " + one.message);
      return rep;
    }
    if (w) {
      if (one.step->kind != w->step.kind ||
          !vec_eq(one.step->apex, w->step.apex) ||
          (one.step->kind == StepKind::StackOnFacet && one.step->facet != w->step.facet)) {
        fail("witness step does not match its certificate");
        return rep;
      }
    }
    if (i == 1 && !wit.same_vertex_set(p0)) {
      // P_0 c= P'_1 c= P_0 forces equality: the first extension is pyramidal.
      fail("first witness must equal P_0");
      return rep;
    }
  }
  rep.valid = true;
  rep.message = "ok";
  rep.final_polytope = qc.polytopes.back();
  rep.defect = defect(qc, defect_tol, rule);
  return rep;
}

namespace {

// Codimension-2 faces of P as vertex-index sets: intersections of facet
// pairs whose common tight set has affine dimension dim(P) - 2.
std::vector<std::vector<int>> ridges(const Polytope& p) {
  std::vector<std::vector<int>> out;
  const int k = p.dim();
  if (k < 2) return out;
  for (size_t i = 0; i < p.facets().size(); ++i)
    for (size_t j = i + 1; j < p.facets().size(); ++j) {
      std::vector<int> common;
      std::set_intersection(p.facets()[i].verts.begin(), p.facets()[i].verts.end(),
                            p.facets()[j].verts.begin(), p.facets()[j].verts.end(),
                            std::back_inserter(common));
      if (common.empty()) continue;
      std::vector<Vec> pts;
      for (int q : common) pts.push_back(p.vertex(q));
      if (affine_rank(pts) != k - 2) continue;
      if (std::find(out.begin(), out.end(), common) == out.end()) out.push_back(common);
    }
  return out;
}

// Smallest face of q containing all the given points, as a vertex set.
std::vector<Vec> minimal_face(const Polytope& q, const std::vector<Vec>& pts) {
  std::vector<int> tight_facets;
  for (size_t i = 0; i < q.facets().size(); ++i) {
    const Facet& f = q.facets()[i];
    bool all = true;
    for (const Vec& x : pts) {
      auto l = local_coords(q.frame(), x);
      if (!l || f.normal.dot(*l) != f.offset) {
        all = false;
        break;
      }
    }
    if (all) tight_facets.push_back(static_cast<int>(i));
  }
  std::vector<Vec> face;
  for (size_t vi = 0; vi < q.vertices().size(); ++vi) {
    bool on_all = true;
    for (int fi : tight_facets)
      if (!std::binary_search(q.facets()[fi].verts.begin(), q.facets()[fi].verts.end(),
                              static_cast<int>(vi))) {
        on_all = false;
        break;
      }
    if (on_all) face.push_back(q.vertex(static_cast<int>(vi)));
  }
  return face;
}

}  // namespace

VerificationReport verify_stacked_restricted(const Polytope& p, const Polytope& q) {
  VerificationReport rep = verify_pyramidal(p, q);
  if (!rep.valid) return rep;
  for (const auto& ridge : ridges(p)) {
    std::vector<Vec> pts;
    for (int i : ridge) pts.push_back(p.vertex(i));
    std::vector<Vec> face = minimal_face(q, pts);
    if (face.size() != pts.size()) {
      rep.valid = false;
      rep.message = "a codimension-2 face of P disappeared";
      rep.step.reset();
      return rep;
    }
    std::sort(pts.begin(), pts.end(), lex_less);
    for (size_t i = 0; i < pts.size(); ++i)
      if (!vec_eq(pts[i], face[i])) {
        rep.valid = false;
        rep.message = "a codimension-2 face of P disappeared";
        rep.step.reset();
        return rep;
      }
  }
  return rep;
}

QuasiChain quasi_from_chain(const GrowthChain& chain) {
  QuasiChain qc;
  qc.polytopes = chain.intermediates();
  qc.defect = DistanceInterval::zero();
  return qc;
}

}  // namespace pyragrow
