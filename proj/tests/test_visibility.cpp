#include <doctest.h>

#include "pyragrow/visibility.hpp"
#include "test_support.hpp"

using namespace pyragrow;

namespace {

Polytope unit_square() {
  return conv_hull({pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})});
}

// Facet index of p whose vertex set is exactly {a, b}.
int facet_of(const Polytope& p, const Vec& a, const Vec& b) {
  return p.find_facet(conv_hull({a, b}));
}

}  // namespace

TEST_CASE("plain visibility from outside the square") {
  Polytope sq = unit_square();
  auto vis = visible_facets(sq, pt({2, "1/2"}));
  REQUIRE(vis.size() == 1);
  CHECK(vis[0] == facet_of(sq, pt({1, 0}), pt({1, 1})));

  auto vis2 = visible_facets(sq, pt({2, 2}));
  CHECK(vis2.size() == 2);

  CHECK(visible_facets(sq, pt({"1/2", "1/2"})).empty());
  CHECK(visible_facets(sq, pt({1, "1/2"})).empty());  // boundary sees nothing

  Polytope tri3 = conv_hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0})});
  CHECK_THROWS_AS(visible_facets(tri3, pt({0, 0, 1})), std::invalid_argument);
}

TEST_CASE("unobstructed visibility on a tetrahedron fixture") {
  // ref = P v_f Q: P and Q triangles glued along edge f.
  Polytope p = conv_hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0})});
  Polytope q = conv_hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 0, 1})});
  Polytope ref = conv_union(p, q);
  REQUIRE(ref.dim() == 3);

  // Viewpoint beyond the facet conv((0,1,0),(1,0,0),(0,0,1)) of the
  // tetrahedron: sees exactly the edge of P between (0,1,0) and (1,0,0).
  Vec v = pt({2, 2, 2});
  auto fs = unobstructed_visible_facets(p, v, ref);
  REQUIRE(fs.facets.size() == 1);
  CHECK(fs.facets[0] == facet_of(p, pt({1, 0, 0}), pt({0, 1, 0})));

  // A triangle strictly inside the bottom facet: from above, every sight
  // triangle passes through the body of ref, so nothing is visible.
  Polytope inner = conv_hull({pt({"1/8", "1/8", 0}), pt({"1/4", "1/8", 0}), pt({"1/8", "1/4", 0})});
  auto fs2 = unobstructed_visible_facets(inner, pt({0, 0, 2}), ref);
  CHECK(fs2.facets.empty());

  // From below, on the other hand, nothing obstructs the edges of P.
  Vec below = pt({"1/10", "1/10", -3});
  auto fs4 = unobstructed_visible_facets(p, below, ref);
  CHECK(fs4.facets.size() == 3);

  // Viewpoint inside ref yields the empty set.
  auto fs3 = unobstructed_visible_facets(p, pt({"1/4", "1/4", "1/8"}), ref);
  CHECK(fs3.facets.empty());
}

TEST_CASE("self-reference reduces to plain visibility") {
  TestRng rng(123);
  for (int iter = 0; iter < 8; ++iter) {
    Polytope h = rng.random_polytope(2, 5, 6);
    if (h.dim() != 2) continue;
    Vec v = rng.rational_point(2, 8);
    auto plain = visible_facets(h, v);
    auto unobs = unobstructed_visible_facets(h, v, h);
    CHECK(plain == unobs.facets);
  }
}

TEST_CASE("monotonicity: larger references never see more") {
  TestRng rng(321);
  int done = 0;
  while (done < 6) {
    Polytope pp = rng.random_polytope(3, 4, 5);
    if (pp.dim() < 2) continue;
    Polytope ref1 = conv_union(pp, rng.random_polytope(3, 4, 4));
    Polytope ref2 = conv_union(ref1, rng.random_polytope(3, 4, 4));
    Vec v = rng.rational_point(3, 10);
    ++done;
    auto s1 = unobstructed_visible_facets(pp, v, ref1);
    auto s2 = unobstructed_visible_facets(pp, v, ref2);
    for (int f : s2.facets)
      CHECK(std::find(s1.facets.begin(), s1.facets.end(), f) != s1.facets.end());
    // Self-consistency: unobstructed within the plain set when v in Aff(pp).
    if (local_coords(pp.frame(), v)) {
      auto plain = visible_facets(pp, v);
      for (int f : s1.facets)
        if (contains_polytope(ref1, pp))
          CHECK(std::find(plain.begin(), plain.end(), f) != plain.end());
    }
  }
}

TEST_CASE("visible_boundary mirrors the facet set") {
  Polytope sq = unit_square();
  Vec v = pt({3, "1/3"});
  auto a = unobstructed_visible_facets(sq, v, sq);
  auto b = visible_boundary(sq, v, sq);
  CHECK(a.facets == b.facets);
}
