#include "pyragrow/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace pyragrow {

namespace {

struct HSKey {
  Vec a;
  Rational b;
  bool operator<(const HSKey& o) const {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a(i) < o.a(i)) return true;
      if (a(i) > o.a(i)) return false;
    }
    return b < o.b;
  }
};

struct WorkFacet {
  Vec normal;
  Rational offset;
  std::vector<int> tights;
};

// Hyperplane through the k local points rows(i); nullopt unless they are
// affinely independent (so the hyperplane is unique).
std::optional<std::pair<Vec, Rational>> hyperplane_through(const std::vector<Vec>& pts,
                                                           const std::vector<int>& idx) {
  const int k = static_cast<int>(pts[idx[0]].size());
  Mat diffs(static_cast<int>(idx.size()) - 1, k);
  for (size_t i = 1; i < idx.size(); ++i)
    diffs.row(static_cast<int>(i) - 1) = (pts[idx[i]] - pts[idx[0]]).transpose();
  Mat ns = nullspace(diffs);
  if (ns.cols() != 1) return std::nullopt;
  Vec n = ns.col(0);
  Rational b = n.dot(pts[idx[0]]);
  canonicalize_functional(n, b);
  return std::make_pair(std::move(n), std::move(b));
}

void subsets_rec(const std::vector<int>& pool, size_t start, int need, std::vector<int>& cur,
                 const std::function<void(const std::vector<int>&)>& fn) {
  if (need == 0) {
    fn(cur);
    return;
  }
  for (size_t i = start; i + static_cast<size_t>(need) <= pool.size(); ++i) {
    cur.push_back(pool[i]);
    subsets_rec(pool, i + 1, need - 1, cur, fn);
    cur.pop_back();
  }
}

void for_each_subset(const std::vector<int>& pool, int size,
                     const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur;
  subsets_rec(pool, 0, size, cur, fn);
}

}  // namespace

Polytope Polytope::hull(const std::vector<Vec>& input) {
  Polytope out;
  if (input.empty()) return out;

  const int n = static_cast<int>(input[0].size());
  for (const Vec& p : input)
    if (p.size() != n) throw std::invalid_argument("conv_hull: mixed ambient dimensions");

  std::vector<Vec> pts = input;
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end(), vec_eq), pts.end());

  out.ambient_ = n;

  // Interim frame; rebuilt canonically from the final vertex set below.
  AffineSubspace frame = affine_hull(pts);
  const int k = frame.dim();

  if (k == 0) {
    out.dim_ = 0;
    out.frame_ = frame;
    out.verts_ = {pts[0]};
    out.verts_local_ = {Vec(0)};
    return out;
  }

  std::vector<Vec> loc(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    auto l = local_coords(frame, pts[i]);
    if (!l) throw std::logic_error("conv_hull: point off its own affine hull");
    loc[i] = *l;
  }

  const int m = static_cast<int>(pts.size());
  std::vector<bool> extreme(m, false), processed(m, false);

  // Affinely independent seed simplex, greedy in lex order.
  std::vector<int> seed = {0};
  {
    Mat acc(k, 0);
    for (int i = 1; i < m && static_cast<int>(seed.size()) < k + 1; ++i) {
      Mat cand(k, acc.cols() + 1);
      cand.leftCols(acc.cols()) = acc;
      cand.col(acc.cols()) = loc[i] - loc[0];
      if (rank(cand) == cand.cols()) {
        acc = std::move(cand);
        seed.push_back(i);
      }
    }
  }
  if (static_cast<int>(seed.size()) != k + 1)
    throw std::logic_error("conv_hull: rank mismatch building seed simplex");

  std::map<HSKey, WorkFacet> facets;
  auto add_facet = [&](Vec nrm, Rational off) {
    HSKey key{nrm, off};
    facets.emplace(std::move(key), WorkFacet{std::move(nrm), std::move(off), {}});
  };

  for (int omit = 0; omit < k + 1; ++omit) {
    std::vector<int> idx;
    for (int j = 0; j < k + 1; ++j)
      if (j != omit) idx.push_back(seed[j]);
    auto hp = hyperplane_through(loc, idx);
    if (!hp) throw std::logic_error("conv_hull: degenerate seed facet");
    auto [nrm, off] = *hp;
    const Rational s = nrm.dot(loc[seed[omit]]) - off;
    if (s > 0) {
      nrm = -nrm;
      off = -off;
    } else if (s == 0) {
      throw std::logic_error("conv_hull: seed point on seed facet");
    }
    add_facet(std::move(nrm), std::move(off));
  }
  for (int j : seed) extreme[j] = processed[j] = true;

  auto refresh_incidence_and_vertices = [&]() {
    // Tight sets over processed extreme points, then the rank-k test for
    // extremeness, then tight sets again over the survivors.
    for (int pass = 0; pass < 2; ++pass) {
      for (auto& [key, f] : facets) {
        f.tights.clear();
        for (int q = 0; q < m; ++q)
          if (extreme[q] && f.normal.dot(loc[q]) == f.offset) f.tights.push_back(q);
      }
      if (pass == 1) break;
      for (int q = 0; q < m; ++q) {
        if (!extreme[q]) continue;
        Mat nm(0, k);
        for (const auto& [key, f] : facets) {
          if (f.normal.dot(loc[q]) == f.offset) {
            nm.conservativeResize(nm.rows() + 1, k);
            nm.row(nm.rows() - 1) = f.normal.transpose();
          }
        }
        if (rank(nm) < k) extreme[q] = false;
      }
    }
  };
  refresh_incidence_and_vertices();

  for (int i = 0; i < m; ++i) {
    if (processed[i]) continue;
    processed[i] = true;
    const Vec& p = loc[i];

    bool outside = false;
    for (const auto& [key, f] : facets)
      if (f.normal.dot(p) > f.offset) {
        outside = true;
        break;
      }
    if (!outside) continue;  // inside the hull so far, never extreme

    // Pool: current vertices on a visible or coplanar facet. New facets
    // through p are spanned by p plus k-1 pool points.
    std::set<int> pool_set;
    for (const auto& [key, f] : facets)
      if (f.normal.dot(p) >= f.offset)
        for (int q : f.tights) pool_set.insert(q);
    std::vector<int> pool(pool_set.begin(), pool_set.end());

    std::map<HSKey, WorkFacet> next;
    for (const auto& [key, f] : facets)
      if (f.normal.dot(p) <= f.offset) next.emplace(key, f);

    for_each_subset(pool, k - 1, [&](const std::vector<int>& sub) {
      Mat diffs(k - 1, k);
      for (size_t j = 0; j < sub.size(); ++j)
        diffs.row(static_cast<int>(j)) = (loc[sub[j]] - p).transpose();
      Mat ns = nullspace(diffs);
      if (ns.cols() != 1) return;
      Vec nrm = ns.col(0);
      Rational off = nrm.dot(p);
      bool pos = false, neg = false;
      for (int q = 0; q < m && !(pos && neg); ++q) {
        if (!extreme[q]) continue;
        const Rational s = nrm.dot(loc[q]) - off;
        if (s > 0) pos = true;
        if (s < 0) neg = true;
      }
      if (pos && neg) return;  // not supporting
      if (pos) {
        nrm = -nrm;
        off = -off;
      }
      canonicalize_functional(nrm, off);
      next.emplace(HSKey{nrm, off}, WorkFacet{nrm, off, {}});
    });

    facets = std::move(next);
    extreme[i] = true;
    refresh_incidence_and_vertices();
  }

  // Canonical output: vertices in lex order (input order is already lex),
  // frame re-derived from vertices only, facet data re-expressed in it.
  std::vector<Vec> vs;
  std::vector<int> old_index;
  for (int i = 0; i < m; ++i)
    if (extreme[i]) {
      vs.push_back(pts[i]);
      old_index.push_back(i);
    }

  out.dim_ = k;
  out.frame_ = affine_hull(vs);
  out.verts_ = vs;
  out.verts_local_.resize(vs.size());
  for (size_t i = 0; i < vs.size(); ++i) {
    auto l = local_coords(out.frame_, vs[i]);
    if (!l) throw std::logic_error("conv_hull: vertex off final frame");
    out.verts_local_[i] = *l;
  }

  std::map<int, int> renum;
  for (size_t i = 0; i < old_index.size(); ++i) renum[old_index[i]] = static_cast<int>(i);

  for (const auto& [key, f] : facets) {
    Facet g;
    for (int q : f.tights) g.verts.push_back(renum.at(q));
    std::sort(g.verts.begin(), g.verts.end());
    auto hp = hyperplane_through(out.verts_local_, g.verts);
    if (!hp) throw std::logic_error("conv_hull: facet does not span a hyperplane");
    g.normal = hp->first;
    g.offset = hp->second;
    // Orient inward against any vertex off the facet.
    for (size_t q = 0; q < vs.size(); ++q) {
      const Rational s = g.normal.dot(out.verts_local_[q]) - g.offset;
      if (s > 0) {
        g.normal = -g.normal;
        g.offset = -g.offset;
        break;
      }
      if (s < 0) break;
    }
    out.facets_.push_back(std::move(g));
  }
  std::sort(out.facets_.begin(), out.facets_.end(),
            [](const Facet& x, const Facet& y) { return x.verts < y.verts; });
  return out;
}

Polytope conv_hull(const std::vector<Vec>& points) { return Polytope::hull(points); }

Polytope conv_union(const Polytope& p, const Polytope& q) {
  std::vector<Vec> pts = p.vertices();
  pts.insert(pts.end(), q.vertices().begin(), q.vertices().end());
  return conv_hull(pts);
}

Polytope conv_with_point(const Polytope& p, const Vec& x) {
  std::vector<Vec> pts = p.vertices();
  pts.push_back(x);
  return conv_hull(pts);
}

bool contains_polytope(const Polytope& outer, const Polytope& inner) {
  for (const Vec& v : inner.vertices())
    if (!outer.contains(v)) return false;
  return true;
}

Location Polytope::locate(const Vec& x) const {
  if (is_empty()) return Location::Outside;
  auto l = local_coords(frame_, x);
  if (!l) return Location::Outside;
  bool boundary = false;
  for (const Facet& f : facets_) {
    const Rational s = f.normal.dot(*l) - f.offset;
    if (s > 0) return Location::Outside;
    if (s == 0) boundary = true;
  }
  return boundary ? Location::Boundary : Location::Interior;
}

bool Polytope::contains(const Vec& x) const { return locate(x) != Location::Outside; }

HalfSpace Polytope::facet_halfspace_ambient(int i) const {
  const Facet& f = facets_[i];
  auto [a, b] = lift_functional(frame_, f.normal, f.offset);
  return HalfSpace::canonical(std::move(a), std::move(b));
}

std::vector<Hyperplane> Polytope::affine_equalities() const {
  std::vector<Hyperplane> out;
  for (auto& [a, b] : equality_constraints(frame_)) out.push_back(Hyperplane{a, b});
  return out;
}

std::vector<std::pair<int, int>> Polytope::edges() const {
  std::vector<std::pair<int, int>> out;
  const int nv = static_cast<int>(verts_.size());
  if (dim_ < 1) return out;
  if (dim_ == 1) {
    out.emplace_back(0, 1);
    return out;
  }
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j) {
      Mat nm(0, dim_);
      for (const Facet& f : facets_) {
        const bool has_i = std::binary_search(f.verts.begin(), f.verts.end(), i);
        const bool has_j = std::binary_search(f.verts.begin(), f.verts.end(), j);
        if (has_i && has_j) {
          nm.conservativeResize(nm.rows() + 1, dim_);
          nm.row(nm.rows() - 1) = f.normal.transpose();
        }
      }
      if (rank(nm) == dim_ - 1) out.emplace_back(i, j);
    }
  return out;
}

Polytope Polytope::facet_polytope(int i) const {
  std::vector<Vec> pts;
  for (int q : facets_[i].verts) pts.push_back(verts_[q]);
  return conv_hull(pts);
}

Vec Polytope::barycenter() const {
  if (is_empty()) throw std::invalid_argument("barycenter of empty polytope");
  Vec s = Vec::Zero(ambient_);
  for (const Vec& v : verts_) s += v;
  return s / Rational(static_cast<int>(verts_.size()));
}

bool Polytope::same_vertex_set(const Polytope& o) const {
  if (verts_.size() != o.verts_.size()) return false;
  for (size_t i = 0; i < verts_.size(); ++i)
    if (!vec_eq(verts_[i], o.verts_[i])) return false;
  return true;
}

int Polytope::find_facet(const Polytope& f) const {
  for (size_t i = 0; i < facets_.size(); ++i) {
    const auto& t = facets_[i].verts;
    if (t.size() != f.vertices().size()) continue;
    bool ok = true;
    for (size_t j = 0; j < t.size() && ok; ++j)
      if (!vec_eq(verts_[t[j]], f.vertices()[j])) ok = false;
    if (ok) return static_cast<int>(i);
  }
  return -1;
}

int Polytope::vertex_index(const Vec& v) const {
  for (size_t i = 0; i < verts_.size(); ++i)
    if (vec_eq(verts_[i], v)) return static_cast<int>(i);
  return -1;
}

std::string Polytope::describe() const {
  std::ostringstream os;
  os << "polytope(dim=" << dim_ << ", ambient=" << ambient_ << ", verts=" << verts_.size()
     << ", facets=" << facets_.size() << ")";
  return os.str();
}

void validate(const Polytope& p) {
  if (p.is_empty()) return;
  const int k = p.dim_;
  if (affine_rank(p.verts_) != k) throw std::logic_error("validate: dim mismatch");
  for (size_t i = 0; i + 1 < p.verts_.size(); ++i)
    if (!lex_less(p.verts_[i], p.verts_[i + 1]))
      throw std::logic_error("validate: vertices not sorted");
  for (const Facet& f : p.facets_) {
    if (static_cast<int>(f.verts.size()) < k) throw std::logic_error("validate: thin facet");
    std::vector<Vec> tv;
    for (size_t q = 0; q < p.verts_.size(); ++q) {
      const Rational s = f.normal.dot(p.verts_local_[q]) - f.offset;
      if (s > 0) throw std::logic_error("validate: vertex beyond facet");
      const bool tight = (s == 0);
      const bool listed = std::binary_search(f.verts.begin(), f.verts.end(), static_cast<int>(q));
      if (tight != listed) throw std::logic_error("validate: incidence mismatch");
      if (tight) tv.push_back(p.verts_local_[q]);
    }
    if (affine_rank(tv) != k - 1) throw std::logic_error("validate: facet rank");
  }
  // Every vertex is a basic point: tight facet normals span the local space.
  for (size_t q = 0; q < p.verts_.size(); ++q) {
    Mat nm(0, k);
    for (const Facet& f : p.facets_)
      if (std::binary_search(f.verts.begin(), f.verts.end(), static_cast<int>(q))) {
        nm.conservativeResize(nm.rows() + 1, k);
        nm.row(nm.rows() - 1) = f.normal.transpose();
      }
    if (k > 0 && rank(nm) != k) throw std::logic_error("validate: vertex not basic");
  }
}

}  // namespace pyragrow
