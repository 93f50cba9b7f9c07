#include "qtoric/errors.hpp"
#include "qtoric/polytope.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <vector>

using namespace qtoric;
using qtest::cube_hp;
using qtest::qvec;
using qtest::rat;
using qtest::simplex_hp;

TEST_CASE("simplex enumeration") {
  HPolytope s = simplex_hp(3);
  CHECK(s.dim == 3);
  CHECK(s.num_facets() == 4);
  CHECK(s.num_vertices() == 4);
  CHECK(s.is_finely_ordered());
  CHECK(s.is_normal_form());

  const PVertex* origin = s.find_vertex({1, 2, 3});
  REQUIRE(origin != nullptr);
  CHECK(origin->point == qvec({0, 0, 0}));
  const PVertex* tip = s.find_vertex({2, 3, 4});
  REQUIRE(tip != nullptr);
  CHECK(tip->point == qvec({1, 0, 0}));
  CHECK(s.find_vertex({1, 4}) == nullptr);

  CombPolytope c = s.comb();
  validate_comb(c);
  CHECK(c.vertex_sets ==
        std::vector<std::vector<int>>{
            {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
}

TEST_CASE("cube enumeration and facet pairing") {
  HPolytope c = cube_hp(3);
  CHECK(c.num_facets() == 6);
  CHECK(c.num_vertices() == 8);
  /* Every vertex picks one of {i, 3+i} per coordinate. */
  for (const PVertex& v : c.vertices) {
    REQUIRE(v.facets.size() == 3);
    std::vector<bool> seen(3, false);
    for (int f : v.facets) {
      int coord = (f - 1) % 3;
      CHECK_FALSE(seen[coord]);
      seen[coord] = true;
    }
  }
}

TEST_CASE("vertex enumeration rejects bad inputs") {
  CHECK_THROWS_AS(vertices_from_halfspaces({}), BadParameters);

  HalfSpace bad{{rat(1)}, rat(0)};
  HalfSpace bad2{{rat(1), rat(0)}, rat(0)};
  CHECK_THROWS_AS(vertices_from_halfspaces({bad, bad2}), BadParameters);

  /* Positive orthant: recession cone is the orthant itself. */
  HalfSpace x{{rat(1), rat(0)}, rat(0)};
  HalfSpace y{{rat(0), rat(1)}, rat(0)};
  CHECK_THROWS_AS(vertices_from_halfspaces({x, y}), Unbounded);

  /* Bounded directions but empty interior. */
  HalfSpace top{{rat(-1), rat(-1)}, rat(-1)};
  CHECK_THROWS_AS(vertices_from_halfspaces({x, y, top}), Empty);

  /* Square plus a diagonal through the origin corner: three facets meet. */
  HPolytope sq = cube_hp(2);
  std::vector<HalfSpace> hs = sq.halfspaces;
  hs.push_back(HalfSpace{{rat(1), rat(1)}, rat(0)});
  CHECK_THROWS_AS(vertices_from_halfspaces(hs), NotSimple);

  /* Square plus a facet far away from it. */
  hs = sq.halfspaces;
  hs.push_back(HalfSpace{{rat(-1), rat(-1)}, rat(5)});
  CHECK_THROWS_AS(vertices_from_halfspaces(hs), Redundant);
}

TEST_CASE("recession cone test") {
  CHECK(recession_cone_trivial(simplex_hp(2).a_matrix()));
  CHECK(recession_cone_trivial(cube_hp(3).a_matrix()));
  QMatrix half = qtest::qmat({{1, 0}, {0, 1}});
  CHECK_FALSE(recession_cone_trivial(half));
  QMatrix slab = qtest::qmat({{1, 0}, {-1, 0}});
  CHECK_FALSE(recession_cone_trivial(slab));
}

TEST_CASE("face poset of the triangle") {
  auto faces = face_poset(simplex_hp(2).comb());
  REQUIRE(faces.size() == 3);
  CHECK(faces[0] == std::vector<std::vector<int>>{{}});
  CHECK(faces[1] == std::vector<std::vector<int>>{{1}, {2}, {3}});
  CHECK(faces[2] == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("face poset of the cube counts") {
  auto faces = face_poset(cube_hp(3).comb());
  REQUIRE(faces.size() == 4);
  CHECK(faces[1].size() == 6);
  CHECK(faces[2].size() == 12);
  CHECK(faces[3].size() == 8);
}

TEST_CASE("fine order permutation keeps relative order") {
  std::vector<int> perm = fine_order_permutation(5, {2, 4});
  CHECK(perm == std::vector<int>{3, 1, 4, 2, 5});

  HPolytope s = simplex_hp(2);
  HPolytope moved = fine_order(s, {2, 3});
  CHECK(moved.is_finely_ordered());
  CHECK(moved.comb().vertex_sets.front() == std::vector<int>{1, 2});
  /* Permuting back with the inverse recovers the original. */
  std::vector<int> inv(3);
  std::vector<int> p = fine_order_permutation(3, {2, 3});
  for (int i = 0; i < 3; ++i) inv[p[i] - 1] = i + 1;
  CHECK(apply_facet_permutation(moved, inv) == s);
}

TEST_CASE("product facet ordering") {
  HPolytope sq = cube_hp(2);
  CHECK(sq.comb().vertex_sets ==
        std::vector<std::vector<int>>{{1, 2}, {1, 4}, {2, 3}, {3, 4}});

  /* Interval x interval x interval: all lows first, then all highs. */
  HPolytope c3 = cube_hp(3);
  const PVertex* v = c3.find_vertex({1, 2, 3});
  REQUIRE(v != nullptr);
  CHECK(v->point == qvec({0, 0, 0}));
  const PVertex* far = c3.find_vertex({4, 5, 6});
  REQUIRE(far != nullptr);
  CHECK(far->point == qvec({1, 1, 1}));
}

TEST_CASE("product is associative under the ordering convention") {
  CombPolytope i1 = cube_hp(1).comb();
  CombPolytope t = simplex_hp(2).comb();
  CHECK(product(product(i1, i1), t) == product(i1, product(i1, t)));
  HPolytope hi = cube_hp(1);
  HPolytope ht = simplex_hp(2);
  CHECK(product(product(hi, hi), ht) == product(hi, product(hi, ht)));
}

TEST_CASE("normal form rescales facet normals") {
  /* Triangle with the first two inequalities doubled. */
  std::vector<HalfSpace> hs;
  hs.push_back(HalfSpace{{rat(2), rat(0)}, rat(0)});
  hs.push_back(HalfSpace{{rat(0), rat(2)}, rat(0)});
  hs.push_back(HalfSpace{{rat(-1), rat(-1)}, rat(1)});
  HPolytope p = vertices_from_halfspaces(hs);
  CHECK_FALSE(p.is_normal_form());

  HPolytope nf = normal_form(p);
  CHECK(nf.is_normal_form());
  CHECK(nf.b_vector() == qvec({0, 0, 1}));
  CHECK(nf.halfspaces[0].normal == qvec({1, 0}));
  CHECK(nf.halfspaces[1].normal == qvec({0, 1}));
  CHECK(nf.halfspaces[2].normal == QVec{rat(-1, 2), rat(-1, 2)});
  CHECK(nf.comb() == p.comb());

  /* A translated copy also lands in normal form. */
  std::vector<HalfSpace> shifted;
  shifted.push_back(HalfSpace{{rat(1), rat(0)}, rat(-1)});
  shifted.push_back(HalfSpace{{rat(0), rat(1)}, rat(-2)});
  shifted.push_back(HalfSpace{{rat(-1), rat(-1)}, rat(4)});
  HPolytope q = vertices_from_halfspaces(shifted);
  CHECK_FALSE(q.is_normal_form());
  HPolytope qn = normal_form(q);
  CHECK(qn.is_normal_form());
  CHECK(qn == simplex_hp(2));
}

TEST_CASE("edge frame orientation at polygon vertices") {
  HPolytope t = simplex_hp(2);
  CHECK(orientation_at_vertex(t, {1, 2}) == 1);
  CHECK(orientation_at_vertex(t, {1, 3}) == -1);
  CHECK(orientation_at_vertex(t, {2, 3}) == 1);

  HPolytope sq = cube_hp(2);
  CHECK(orientation_at_vertex(sq, {1, 2}) == 1);
  CHECK(orientation_at_vertex(sq, {1, 4}) == -1);
  CHECK(orientation_at_vertex(sq, {2, 3}) == 1);
  CHECK(orientation_at_vertex(sq, {3, 4}) == 1);

  CHECK_THROWS_AS(orientation_at_vertex(t, {1, 4}), NotAVertex);
}

TEST_CASE("a_matrix and b_vector expose the inequality system") {
  HPolytope t = simplex_hp(2);
  QMatrix a = t.a_matrix();
  REQUIRE(a.rows() == 3);
  REQUIRE(a.cols() == 2);
  QVec b = t.b_vector();
  for (const PVertex& v : t.vertices) {
    QVec y = mul(a, v.point);
    for (std::size_t i = 0; i < y.size(); ++i) {
      Rat slack = y[i] + b[i];
      CHECK(slack >= 0);
    }
  }
}
