#include "qtoric/cohomology.hpp"
#include "qtoric/errors.hpp"
#include "qtoric/quasitoric.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace qtoric;
using qtest::cube_hp;
using qtest::rat;

namespace {

Rat cn(const OmniQT& m, const std::vector<int>& ks) {
  return chern_number(ring_presentation(m), ks);
}

/* Degree-2 coefficient vector of a class on the basis u_a^2, u_a u_b, u_b^2
   for a presentation with exactly two surviving generators. */
QVec deg2_coeffs(const CohClass& c) {
  QVec out(3, Rat(0));
  for (const auto& [e, v] : c.terms) {
    if (e == std::vector<int>{2, 0}) out[0] = v;
    else if (e == std::vector<int>{1, 1}) out[1] = v;
    else if (e == std::vector<int>{0, 2}) out[2] = v;
    else REQUIRE(false);
  }
  return out;
}

/* Reduce v against rows already in reduced echelon form. */
QVec reduce_against(const QMatrix& rows, QVec v,
                    const std::vector<std::size_t>& pivots) {
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const Rat f = v[pivots[r]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows(r, j);
  }
  return v;
}

bool all_zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rat& x) { return x.is_zero(); });
}

}  // namespace

TEST_CASE("minimal non-faces") {
  CHECK(minimal_non_faces(cp(2).polytope) ==
        std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK(minimal_non_faces(cube_hp(2).comb()) ==
        std::vector<std::vector<int>>{{1, 3}, {2, 4}});
  CHECK(minimal_non_faces(b_rs(1, 3).polytope) ==
        std::vector<std::vector<int>>{{1, 4}, {2, 3, 5}});
  /* Hexagon: every non-adjacent facet pair. */
  CombPolytope hex = box_sum(cp(2), cp(2)).polytope;
  CHECK(minimal_non_faces(hex).size() == 9);
}

TEST_CASE("presentation construction and scale guard") {
  RingPresentation r = ring_presentation(cp(2));
  CHECK(r.dim == 2);
  CHECK(r.num_facets == 3);
  CHECK(r.reduced_vars() == 1);
  CHECK(r.non_faces == std::vector<std::vector<int>>{{1, 2, 3}});

  CHECK_THROWS_AS(ring_presentation(s_product(5)), ScaleLimit);
  OmniQT chain = cp(2);
  for (int i = 0; i < 4; ++i) chain = add_cobordism(chain, cp(2));
  CHECK(chain.num_facets() == 15);
  CHECK_THROWS_AS(ring_presentation(chain), ScaleLimit);
}

TEST_CASE("class arithmetic in the surviving generators") {
  RingPresentation r = ring_presentation(s_product(2));
  CohClass u3 = generator_class(r, 3);
  CohClass u4 = generator_class(r, 4);
  /* First generators are eliminated: u1 = -u3, u2 = -u4. */
  CohClass u1 = generator_class(r, 1);
  CHECK(u1.terms == add(zero_class(r, 1), scale(u3, Rat(-1))).terms);

  CohClass s = add(u3, u4);
  CohClass sq = multiply(s, s);
  CHECK(sq.degree == 2);
  CHECK(sq.terms.at({2, 0}) == rat(1));
  CHECK(sq.terms.at({1, 1}) == rat(2));
  CHECK(sq.terms.at({0, 2}) == rat(1));
  CHECK(power(r, s, 2).terms == sq.terms);
  CHECK(power(r, s, 0).terms == one_class(r).terms);

  CohClass c1 = chern_class(r, 1);
  /* u1+u2+u3+u4 = (−u3−u4) + (u3+u4) = 0 for this column block. */
  CHECK(c1.terms.empty());
  CHECK_THROWS_AS(chern_class(r, 5), BadParameters);
  CHECK_THROWS_AS(add(u3, sq), WrongDimension);
}

TEST_CASE("graded pieces of the projective plane") {
  RingPresentation r = ring_presentation(cp(2));
  GradedPiece g0(r, 0);
  CHECK(g0.quotient_dim() == 1);
  GradedPiece g1(r, 1);
  CHECK(g1.quotient_dim() == 1);
  CHECK(g1.quotient_basis() == std::vector<std::vector<int>>{{1}});
  GradedPiece g2(r, 2);
  CHECK(g2.quotient_dim() == 1);
  GradedPiece g3(r, 3);
  CHECK(g3.quotient_dim() == 0);
  CHECK(betti_numbers(r) == std::vector<int>{1, 1, 1});
}

TEST_CASE("betti numbers of standard examples") {
  CHECK(betti_numbers(ring_presentation(cp(4))) ==
        std::vector<int>{1, 1, 1, 1, 1});
  CHECK(betti_numbers(ring_presentation(bott_tower(3, {0, 0, 0}))) ==
        std::vector<int>{1, 3, 3, 1});
  CHECK(betti_numbers(ring_presentation(box_sum(cp(2), cp(2)))) ==
        std::vector<int>{1, 4, 1});
  CHECK(betti_numbers(ring_presentation(b_rs(2, 3))) ==
        std::vector<int>{1, 3, 4, 3, 1});

  /* Rank symmetry between complementary degrees. */
  for (const OmniQT& m : {cp(3), s_product(3), b_rs(1, 3), bounded_flag(3),
                          add_cobordism(cp(2), b_rs(1, 2))}) {
    std::vector<int> b = betti_numbers(ring_presentation(m));
    std::vector<int> rev = b;
    std::reverse(rev.begin(), rev.end());
    CHECK(b == rev);
    int total = 0;
    for (int x : b) total += x;
    CHECK(total == m.num_vertices());
  }
}

TEST_CASE("vertex monomials evaluate to the vertex signs") {
  for (const OmniQT& m :
       {cp(2), cp(3), cp_eps(2, {1, -1}), s_product(2), s_product(3),
        b_rs(1, 2), b_rs(1, 3), bott_tower(2, {1}),
        box_sum(cp(2), cp(2)), difsi_normalize(cp(2)),
        connected_sum(cp(2), reverse_orientation(cp(2)))}) {
    RingPresentation r = ring_presentation(m);
    for (const auto& w : m.polytope.vertex_sets) {
      CHECK(evaluate(r, vertex_monomial(r, w)) == Rat(m.signs.at(w)));
    }
  }
}

TEST_CASE("characteristic numbers of projective spaces") {
  CHECK(cn(cp(2), {2}) == rat(3));
  CHECK(cn(cp(2), {1, 1}) == rat(9));
  CHECK(cn(cp(3), {3}) == rat(4));
  CHECK(cn(cp(3), {1, 2}) == rat(24));
  CHECK(cn(cp(3), {1, 1, 1}) == rat(64));
  CHECK(cn(cp(4), {4}) == rat(5));
  CHECK(cn(cp(4), {1, 3}) == rat(50));
  CHECK(cn(cp(4), {2, 2}) == rat(100));
  CHECK(cn(cp(4), {1, 1, 2}) == rat(250));
  CHECK(cn(cp(4), {1, 1, 1, 1}) == rat(625));

  CHECK_THROWS_AS(cn(cp(2), {1}), WrongDimension);
  CHECK_THROWS_AS(cn(cp(2), {1, 2}), WrongDimension);
}

TEST_CASE("characteristic numbers of products and towers") {
  OmniQT flat = bott_tower(2, {0});
  CHECK(cn(flat, {2}) == rat(4));
  CHECK(cn(flat, {1, 1}) == rat(8));
  OmniQT twisted = bott_tower(2, {1});
  CHECK(cn(twisted, {2}) == rat(4));
  CHECK(cn(twisted, {1, 1}) == rat(8));
  RingPresentation r = ring_presentation(twisted);
  CHECK(todd_genus_dim2(r) == rat(1));
  CHECK_FALSE(toric_obstruction(r));
}

TEST_CASE("orientation reversal negates characteristic numbers") {
  OmniQT m = cp(3);
  OmniQT rev = reverse_orientation(m);
  CHECK(cn(rev, {3}) == rat(-4));
  CHECK(cn(rev, {1, 2}) == rat(-24));
  CHECK(cn(rev, {1, 1, 1}) == rat(-64));
}

TEST_CASE("mixed column flips one characteristic number") {
  OmniQT m = cp_eps(2, {1, -1});
  CHECK(m.sign_sum() == 1);
  CHECK(cn(m, {2}) == rat(1));
  CHECK(cn(m, {1, 1}) == rat(-1));
  RingPresentation r = ring_presentation(m);
  CHECK(todd_genus_dim2(r) == rat(0));
  CHECK(toric_obstruction(r));

  OmniQT rev = reverse_orientation(m);
  CHECK(cn(rev, {2}) == rat(-1));
  CHECK(cn(rev, {1, 1}) == rat(1));
}

TEST_CASE("top characteristic number equals the sign sum") {
  for (const OmniQT& m :
       {cp(2), cp(4), cp_eps(3, {1, 1, -1}), s_product(4), b_rs(2, 3),
        bounded_flag(4), box_sum(b_rs(1, 2), b_rs(1, 2))}) {
    RingPresentation r = ring_presentation(m);
    CHECK(evaluate(r, chern_class(r, r.dim)) == Rat(m.sign_sum()));
  }
}

TEST_CASE("characteristic numbers add under cobordism addition") {
  struct Pair {
    OmniQT a, b;
  };
  const Pair pairs[] = {{cp(2), cp(2)},
                        {cp(2), b_rs(1, 2)},
                        {cp_eps(2, {1, -1}), s_product(2)},
                        {cp(3), s_product(3)},
                        {b_rs(1, 3), bounded_flag(3)}};
  const std::vector<std::vector<std::vector<int>>> parts = {
      {},
      {},
      {{2}, {1, 1}},
      {{3}, {1, 2}, {1, 1, 1}}};
  for (const Pair& pr : pairs) {
    OmniQT s = add_cobordism(pr.a, pr.b);
    for (const auto& ks : parts[static_cast<std::size_t>(pr.a.dim())]) {
      CHECK(cn(s, ks) == cn(pr.a, ks) + cn(pr.b, ks));
    }
  }
}

TEST_CASE("two-dimensional genus on polygon sums") {
  OmniQT hex = box_sum(cp(2), cp(2));
  RingPresentation r = ring_presentation(hex);
  CHECK(cn(hex, {2}) == rat(6));
  CHECK(cn(hex, {1, 1}) == rat(18));
  CHECK(todd_genus_dim2(r) == rat(2));
  CHECK(toric_obstruction(r));

  OmniQT sq = connected_sum(cp(2), reverse_orientation(cp(2)));
  RingPresentation rs = ring_presentation(sq);
  CHECK(cn(sq, {2}) == rat(0));
  CHECK(cn(sq, {1, 1}) == rat(0));
  CHECK(todd_genus_dim2(rs) == rat(0));
  CHECK(toric_obstruction(rs));

  CHECK_THROWS_AS(todd_genus_dim2(ring_presentation(cp(3))), WrongDimension);
}

TEST_CASE("relation ideal of the twisted prism") {
  RingPresentation r = ring_presentation(b_rs(1, 2));
  REQUIRE(r.reduced_vars() == 2);
  REQUIRE(r.non_faces == std::vector<std::vector<int>>{{1, 3}, {2, 4}});

  /* Substituted non-face generators, straight from the presentation. */
  CohClass g1 = multiply(generator_class(r, 1), generator_class(r, 3));
  CohClass g2 = multiply(generator_class(r, 2), generator_class(r, 4));

  /* Hand-built target generators x^2 and x y + y^2 on the same basis. */
  QMatrix target(2, 3);
  target(0, 0) = 1;
  target(1, 1) = 1;
  target(1, 2) = 1;
  std::vector<std::size_t> pivots;
  QMatrix echelon = rref(target, &pivots);
  CHECK(all_zero(reduce_against(echelon, deg2_coeffs(g1), pivots)));
  CHECK(all_zero(reduce_against(echelon, deg2_coeffs(g2), pivots)));

  /* Conversely the targets die in the quotient, so they lie in the
     presentation's ideal; the degree-2 spans then agree by dimension. */
  GradedPiece g(r, 2);
  CohClass t1 = zero_class(r, 2);
  t1.terms[{2, 0}] = 1;
  CohClass t2 = zero_class(r, 2);
  t2.terms[{1, 1}] = 1;
  t2.terms[{0, 2}] = 1;
  CHECK(all_zero(g.reduce(t1)));
  CHECK(all_zero(g.reduce(t2)));
  CHECK(g.quotient_dim() == g.ambient_dim() - 2);
}

TEST_CASE("evaluation needs a rank-one top piece") {
  RingPresentation broken;
  broken.dim = 2;
  broken.num_facets = 4;
  broken.lambda = {{1, 0, -1, 0}, {0, 1, 0, -1}};
  broken.non_faces = {};  // missing monomial relations inflate the top piece
  broken.vertex_sets = cube_hp(2).comb().vertex_sets;
  for (const auto& w : broken.vertex_sets) broken.signs[w] = 1;

  GradedPiece top(broken, 2);
  CHECK(top.quotient_dim() == 3);
  CohClass c = zero_class(broken, 2);
  c.terms[{2, 0}] = 1;
  CHECK_THROWS_AS(evaluate(broken, c), TopDegreeNotRankOne);
}

TEST_CASE("evaluation records the reference vertex") {
  RingPresentation r = ring_presentation(cp(2));
  std::vector<int> ref;
  evaluate(r, chern_class(r, 2), &ref);
  CHECK(ref == std::vector<int>{1, 2});
}

TEST_CASE("graded reduction is supported on the quotient basis") {
  RingPresentation r = ring_presentation(box_sum(cp(2), cp(2)));
  GradedPiece g(r, 2);
  auto basis = g.quotient_basis();
  REQUIRE(g.quotient_dim() == 1);
  QVec v = g.reduce(chern_class(r, 2));
  int nonzero = 0;
  const auto& mons = g.monomials();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) {
      ++nonzero;
      CHECK(std::find(basis.begin(), basis.end(), mons[i]) != basis.end());
    }
  }
  CHECK(nonzero == 1);
  CHECK_THROWS_AS(g.reduce(chern_class(r, 1)), WrongDimension);
}
