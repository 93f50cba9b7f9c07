#include "qtoric/errors.hpp"
#include "qtoric/quasitoric.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace qtoric;
using qtest::mixed_signs;
using qtest::repeated;
using qtest::same_fields;
using qtest::sign_multiset;

TEST_CASE("projective space structures") {
  for (int n = 1; n <= 4; ++n) {
    OmniQT m = cp(n);
    CHECK(m.dim() == n);
    CHECK(m.num_facets() == n + 1);
    CHECK(m.num_vertices() == n + 1);
    CHECK(m.initial_vertex().size() == static_cast<std::size_t>(n));
    CHECK(m.lambda_star() == IMat(n, IVec(1, -1)));
    CHECK(sign_multiset(m.signs) == repeated(1, n + 1));
    CHECK(m.sign_sum() == n + 1);
    CHECK(m.q_plus() == n + 1);
    CHECK(m.q_minus() == 0);
    REQUIRE(m.geometry.has_value());
    CHECK(m.geometry->is_normal_form());
    REQUIRE(m.orientation.has_value());
    CHECK(*m.orientation == 1);
    CHECK_NOTHROW(validate_omniqt(m));
  }
}

TEST_CASE("simplex structure with mixed column") {
  OmniQT m = cp_eps(2, {1, -1});
  CHECK(m.lambda_star() == IMat{{1}, {-1}});
  CHECK(m.signs.at({1, 2}) == 1);
  CHECK(m.signs.at({1, 3}) == 1);
  CHECK(m.signs.at({2, 3}) == -1);
  CHECK(m.sign_sum() == 1);
  CHECK(m.q_minus() == 1);
  CHECK_NOTHROW(validate_omniqt(m));

  CHECK(same_fields(cp_eps(2, {-1, -1}), cp(2)));
  CHECK_THROWS_AS(cp_eps(2, {1}), BadParameters);
  CHECK_THROWS_AS(cp_eps(2, {1, 2}), BadParameters);
}

TEST_CASE("determinant condition is checked vertex by vertex") {
  CombPolytope square = qtest::cube_hp(2).comb();
  IMat good = {{1, 0, -1, 0}, {0, 1, 0, -1}};
  CHECK(validate_dichar(square, good).ok);

  IMat bad = {{1, 0, 2, 0}, {0, 1, 1, 1}};
  DicharReport rep = validate_dichar(square, bad);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.violations.size() == 2);
  CHECK(rep.violations[0].vertex == std::vector<int>{2, 3});
  CHECK(rep.violations[0].det == -2);
  CHECK(rep.violations[1].vertex == std::vector<int>{3, 4});
  CHECK(rep.violations[1].det == 2);
}

TEST_CASE("refined form check") {
  CHECK(is_refined({{1, 0, -1}, {0, 1, -1}}, 2));
  CHECK_FALSE(is_refined({{1, 1, -1}, {0, 1, -1}}, 2));
  CHECK_FALSE(is_refined({{0, 1, -1}, {1, 0, -1}}, 2));
  CHECK_FALSE(is_refined({{1, 0, -1}}, 2));
}

TEST_CASE("structure validation rejects broken data") {
  OmniQT m = cp(2);
  CHECK_NOTHROW(validate_omniqt(m));

  OmniQT bad_sign = m;
  bad_sign.signs[{1, 2}] = 0;
  CHECK_THROWS(validate_omniqt(bad_sign));

  OmniQT missing = m;
  missing.signs.erase({1, 2});
  CHECK_THROWS(validate_omniqt(missing));

  OmniQT extra = m;
  extra.signs[{1, 4}] = 1;
  CHECK_THROWS(validate_omniqt(extra));

  OmniQT unrefined = m;
  unrefined.lambda[0][0] = 2;
  CHECK_THROWS(validate_omniqt(unrefined));
}

TEST_CASE("sphere product signs count the far facets") {
  OmniQT m = s_product(2);
  CHECK(m.lambda_star() == IMat{{1, 0}, {0, 1}});
  CHECK(m.signs.at({1, 2}) == 1);
  CHECK(m.signs.at({1, 4}) == -1);
  CHECK(m.signs.at({2, 3}) == -1);
  CHECK(m.signs.at({3, 4}) == 1);
  CHECK(m.sign_sum() == 0);

  for (int n = 2; n <= 4; ++n) {
    OmniQT s = s_product(n);
    CHECK(s.sign_sum() == 0);
    for (const auto& [w, sigma] : s.signs) {
      int far = 0;
      for (int f : w)
        if (f > n) ++far;
      CHECK(sigma == (far % 2 == 0 ? 1 : -1));
    }
  }
}

TEST_CASE("tower structures over the cube") {
  OmniQT flat = bott_tower(2, {0});
  CHECK(flat.lambda_star() == IMat{{-1, 0}, {0, -1}});
  CHECK(sign_multiset(flat.signs) == repeated(1, 4));
  CHECK(flat.sign_sum() == 4);

  OmniQT twisted = bott_tower(2, {1});
  CHECK(twisted.lambda_star() == IMat{{-1, 0}, {1, -1}});
  CHECK(sign_multiset(twisted.signs) == repeated(1, 4));
  CHECK_NOTHROW(validate_omniqt(twisted));

  CHECK(same_fields(bounded_flag(2), twisted));
  OmniQT bf3 = bounded_flag(3);
  CHECK(bf3.lambda_star() ==
        IMat{{-1, 0, 0}, {1, -1, 0}, {0, 1, -1}});
  CHECK(sign_multiset(bf3.signs) == repeated(1, 8));

  CHECK_THROWS_AS(bott_tower(2, {1, 2}), BadParameters);
  CHECK_THROWS_AS(bott_tower(0, {}), BadParameters);
}

TEST_CASE("prism structures over cube times simplex") {
  OmniQT b12 = b_rs(1, 2);
  CHECK(b12.dim() == 2);
  CHECK(b12.num_facets() == 4);
  CHECK(b12.lambda_star() == IMat{{-1, 0}, {-1, -1}});
  CHECK(sign_multiset(b12.signs) == repeated(1, 4));
  CHECK(b12.sign_sum() == 4);

  OmniQT b23 = b_rs(2, 3);
  CHECK(b23.dim() == 4);
  CHECK(b23.num_facets() == 7);
  CHECK(b23.lambda_star() ==
        IMat{{-1, 0, 0}, {1, -1, 0}, {-1, 0, -1}, {1, -1, -1}});
  CHECK_NOTHROW(validate_omniqt(b23));

  CHECK_THROWS_AS(b_rs(2, 2), BadParameters);
  CHECK_THROWS_AS(b_rs(0, 1), BadParameters);
}

TEST_CASE("rebasing at another vertex") {
  OmniQT m = cp(2);
  OmniQT r = refine_at(m, {1, 3});
  CHECK(r.lambda_star() == IMat{{-1}, {-1}});
  CHECK(sign_multiset(r.signs) == repeated(1, 3));
  REQUIRE(r.orientation.has_value());
  CHECK(*r.orientation == 1);
  REQUIRE(r.geometry.has_value());
  CHECK(r.geometry->is_normal_form());
  CHECK(signs_geometric(r, *r.orientation) == r.signs);
  CHECK_NOTHROW(validate_omniqt(r));

  CHECK_THROWS_AS(refine_at(m, {1, 4}), NotAVertex);
}

TEST_CASE("rebasing relabels signs along the facet permutation") {
  for (const OmniQT& m : {s_product(2), cp(3), b_rs(1, 3)}) {
    for (const auto& w : m.polytope.vertex_sets) {
      std::vector<int> perm =
          fine_order_permutation(m.num_facets(), w);
      OmniQT r = refine_at(m, w);
      for (const auto& [old_w, sigma] : m.signs) {
        std::vector<int> new_w;
        for (int f : old_w) new_w.push_back(perm[f - 1]);
        std::sort(new_w.begin(), new_w.end());
        CHECK(r.signs.at(new_w) == sigma);
      }
      if (m.geometry) {
        REQUIRE(r.orientation.has_value());
        CHECK(signs_geometric(r, *r.orientation) == r.signs);
      }
    }
  }
}

TEST_CASE("raw characteristic pair rebasing") {
  auto [comb, lambda] = refine(cp(2).polytope, cp(2).lambda, {2, 3});
  CHECK(is_refined(lambda, 2));
  CHECK(validate_dichar(comb, lambda).ok);
}

TEST_CASE("kernel lattices of the standard structures") {
  CHECK(kernel_lattice(cp(1).lambda).basis == IMat{{1, 1}});
  CHECK(kernel_lattice(cp(2).lambda).basis == IMat{{1, 1, 1}});
  CHECK(kernel_lattice(cp(3).lambda).basis == IMat{{1, 1, 1, 1}});

  CHECK(kernel_lattice(bott_tower(2, {0}).lambda).basis ==
        IMat{{1, 0, 1, 0}, {0, 1, 0, 1}});
  CHECK(kernel_lattice(s_product(2).lambda).basis ==
        IMat{{1, 0, -1, 0}, {0, 1, 0, -1}});
  CHECK(kernel_lattice(cp_eps(2, {1, -1}).lambda).basis ==
        IMat{{1, -1, -1}});
}

TEST_CASE("orientation reversal flips every sign") {
  OmniQT m = cp(2);
  OmniQT r = reverse_orientation(m);
  CHECK(sign_multiset(r.signs) == repeated(-1, 3));
  CHECK(r.sign_sum() == -3);
  REQUIRE(r.orientation.has_value());
  CHECK(*r.orientation == -1);
  CHECK(same_fields(reverse_orientation(r), m));
}

TEST_CASE("facet conjugation") {
  OmniQT m = cp(2);

  OmniQT c3 = conjugate_facet(m, 3);
  CHECK(c3.lambda_star() == IMat{{1}, {1}});
  CHECK(c3.signs.at({1, 2}) == 1);
  CHECK(c3.signs.at({1, 3}) == -1);
  CHECK(c3.signs.at({2, 3}) == -1);
  CHECK(c3.sign_sum() == -1);
  REQUIRE(c3.orientation.has_value());
  CHECK(*c3.orientation == 1);
  CHECK_NOTHROW(validate_omniqt(c3));
  CHECK(same_fields(conjugate_facet(c3, 3), m));

  OmniQT c1 = conjugate_facet(m, 1);
  CHECK(c1.lambda_star() == IMat{{1}, {-1}});
  CHECK(c1.signs.at({1, 2}) == -1);
  CHECK(c1.signs.at({1, 3}) == -1);
  CHECK(c1.signs.at({2, 3}) == 1);
  REQUIRE(c1.orientation.has_value());
  CHECK(*c1.orientation == -1);
  CHECK(signs_geometric(c1, -1) == c1.signs);
  CHECK(same_fields(conjugate_facet(c1, 1), m));

  CHECK_THROWS_AS(conjugate_facet(m, 0), BadParameters);
  CHECK_THROWS_AS(conjugate_facet(m, 4), BadParameters);
}

TEST_CASE("gluing requires opposite corner signs") {
  CHECK_THROWS_AS(connected_sum(cp(2), cp(2)), SignClash);
  CHECK_THROWS_AS(connected_sum(cp(1), reverse_orientation(cp(1))),
                  DimensionTooLow);
  CHECK_THROWS_AS(connected_sum(cp(2), cp(3)), WrongDimension);
}

TEST_CASE("gluing two triangles gives a square") {
  OmniQT sq = connected_sum(cp(2), reverse_orientation(cp(2)));
  CHECK(sq.dim() == 2);
  CHECK(sq.num_facets() == 4);
  CHECK(sq.num_vertices() == 4);
  CHECK(sq.sign_sum() == 0);
  CHECK(sign_multiset(sq.signs) == mixed_signs(2, 2));
  CHECK_NOTHROW(validate_omniqt(sq));
  REQUIRE(sq.geometry.has_value());
  CHECK(sq.geometry->is_normal_form());
  CHECK(sq.geometry->comb() == sq.polytope);
}

TEST_CASE("gluing in dimension three drops geometry") {
  OmniQT m = connected_sum(cp(3), reverse_orientation(cp(3)));
  CHECK(m.dim() == 3);
  CHECK(m.num_facets() == 5);
  CHECK(m.num_vertices() == 6);
  CHECK(m.sign_sum() == 0);
  CHECK_FALSE(m.geometry.has_value());
  CHECK_NOTHROW(validate_omniqt(m));
  CHECK_THROWS_AS(signs_geometric(m, 1), NoGeometry);
}

TEST_CASE("normalizing makes both signs present") {
  OmniQT p = difsi_normalize(cp(2));
  CHECK(p.dim() == 2);
  CHECK(p.num_vertices() == 5);
  CHECK(p.sign_sum() == 3);
  CHECK(sign_multiset(p.signs) == mixed_signs(1, 4));
  CHECK(p.q_minus() == 1);
  CHECK_NOTHROW(validate_omniqt(p));
  REQUIRE(p.geometry.has_value());
  CHECK(p.geometry->comb() == p.polytope);

  OmniQT q = difsi_normalize(reverse_orientation(cp(2)));
  CHECK(q.num_vertices() == 5);
  CHECK(q.sign_sum() == -3);
  CHECK(sign_multiset(q.signs) == mixed_signs(4, 1));
}

TEST_CASE("cube-mediated sum works for equal corner signs") {
  OmniQT hex = box_sum(cp(2), cp(2));
  CHECK(hex.dim() == 2);
  CHECK(hex.num_facets() == 6);
  CHECK(hex.num_vertices() == 6);
  CHECK(hex.sign_sum() == 6);
  CHECK(sign_multiset(hex.signs) == repeated(1, 6));
  CHECK_NOTHROW(validate_omniqt(hex));
  REQUIRE(hex.geometry.has_value());
  CHECK(hex.geometry->comb() == hex.polytope);

  OmniQT d3 = box_sum(cp(3), cp(3));
  CHECK(d3.dim() == 3);
  CHECK(d3.num_facets() == 8);
  CHECK(d3.num_vertices() == 12);
  CHECK(d3.sign_sum() == 8);
  CHECK_NOTHROW(validate_omniqt(d3));

  CHECK_THROWS_AS(box_sum(cp(2), cp(3)), WrongDimension);
  CHECK_THROWS_AS(box_sum(cp(1), cp(1)), DimensionTooLow);
}

TEST_CASE("cobordism addition matches the cube-mediated sum") {
  OmniQT a = add_cobordism(cp(2), b_rs(1, 2));
  OmniQT b = box_sum(cp(2), b_rs(1, 2));
  CHECK(same_fields(a, b));
  CHECK(a.sign_sum() == 7);
  CHECK(a.num_facets() == 7);
  CHECK(a.num_vertices() == 7);
}

TEST_CASE("sign sums add under the cube-mediated sum") {
  const OmniQT pool[] = {cp(2), reverse_orientation(cp(2)), b_rs(1, 2),
                         s_product(2), cp_eps(2, {1, -1})};
  for (const OmniQT& x : pool) {
    for (const OmniQT& y : pool) {
      OmniQT s = box_sum(x, y);
      CHECK(s.sign_sum() == x.sign_sum() + y.sign_sum());
      CHECK(s.num_facets() == x.num_facets() + y.num_facets());
      CHECK(s.num_vertices() == x.num_vertices() + y.num_vertices());
      CHECK_NOTHROW(validate_omniqt(s));
    }
  }
}

TEST_CASE("polygon realization matches the combinatorics") {
  CombPolytope pent = difsi_normalize(cp(2)).polytope;
  HPolytope g = realize_polygon(pent);
  CHECK(g.comb() == pent);
  CHECK(g.is_normal_form());
  CHECK(g.is_finely_ordered());

  CombPolytope sq = qtest::cube_hp(2).comb();
  CHECK(realize_polygon(sq).comb() == sq);

  CHECK_THROWS_AS(realize_polygon(cp(3).polytope), WrongDimension);
}

TEST_CASE("geometric signs recompute the stored map") {
  for (const OmniQT& m : {cp(2), cp(3), s_product(3), b_rs(1, 2),
                          bott_tower(3, {1, 0, 1})}) {
    REQUIRE(m.geometry.has_value());
    REQUIRE(m.orientation.has_value());
    CHECK(signs_geometric(m, *m.orientation) == m.signs);
    SignMap flipped = signs_geometric(m, -*m.orientation);
    for (const auto& [w, sigma] : m.signs) CHECK(flipped.at(w) == -sigma);
  }
}
