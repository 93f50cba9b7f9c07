#pragma once

#include "qtoric/lattice.hpp"
#include "qtoric/polytope.hpp"

#include <map>
#include <optional>
#include <vector>

namespace qtoric {

/* Vertex (as its sorted facet set) -> +1 or -1. */
using SignMap = std::map<std::vector<int>, int>;

using Orientation = int;  // +1 or -1, relative to the ambient standard one

/* An omnioriented quasitoric manifold in combinatorial form: a simple
   polytope, a refined characteristic matrix (I_n | L*), and the vertex
   sign map. Geometry, when present, is kept in normal form and the
   stored orientation makes the geometric sign rule reproduce `signs`. */
struct OmniQT {
  CombPolytope polytope;
  IMat lambda;  // dim x num_facets, first dim columns = identity
  SignMap signs;
  std::optional<HPolytope> geometry;
  std::optional<Orientation> orientation;

  int dim() const { return polytope.dim; }
  int num_facets() const { return polytope.num_facets; }
  int num_vertices() const { return static_cast<int>(polytope.vertex_sets.size()); }
  std::vector<int> initial_vertex() const;
  IMat lambda_star() const;
  int sign_sum() const;
  int q_plus() const;
  int q_minus() const;
};

struct DicharViolation {
  std::vector<int> vertex;
  Int det;
};

struct DicharReport {
  bool ok = true;
  std::vector<DicharViolation> violations;
};

/* Every vertex's column block must have determinant +-1. */
DicharReport validate_dichar(const CombPolytope& p, const IMat& lambda);

bool is_refined(const IMat& lambda, int dim);

/* Structural checks on the triple; throws on violation. */
void validate_omniqt(const OmniQT& m);

/* Re-expresses the data with `vertex` as the new initial vertex: facets
   re-ordered, lambda premultiplied by the inverse of the new initial
   block, signs relabeled, geometry re-normalized. The abstract sign map
   is preserved. Throws NotAVertex, NotUnimodular. */
OmniQT refine_at(const OmniQT& m, const std::vector<int>& vertex);

/* Raw variant on a characteristic pair. */
std::pair<CombPolytope, IMat> refine(const CombPolytope& p, const IMat& lambda,
                                     const std::vector<int>& vertex);

/* Basis of the integer kernel of lambda: the exponent lattice of the
   subtorus acting freely on the sphere-product model. */
struct KernelLattice {
  IMat basis;  // rows, canonical Hermite form
};

KernelLattice kernel_lattice(const IMat& lambda);

/* sigma(w) = orientation * det(edge frame at w) * det(lambda columns at w).
   Throws NoGeometry. */
SignMap signs_geometric(const OmniQT& m, Orientation orientation);

/* Stores the geometric sign map and the orientation used. */
OmniQT with_geometric_signs(OmniQT m, Orientation orientation);

/* Flips every vertex sign. */
OmniQT reverse_orientation(OmniQT m);

/* Reverses the circle orientation over facet j: negates the j-th column
   (re-refining when j <= n) and flips the sign of every vertex
   containing j. */
OmniQT conjugate_facet(const OmniQT& m, int j);

/* Glues at the two initial vertices, which must carry opposite signs.
   Result is re-refined at the second vertex of the first summand and
   satisfies q = q1+q2-2, m = m1+m2-n, sum(sigma) additive. For n = 2 a
   polygon realization is attached. Throws SignClash, DimensionTooLow. */
OmniQT connected_sum(const OmniQT& m1, const OmniQT& m2);

/* (+-S) # M with S the trivial product structure over the cube, signed
   so the gluing is legal; output has both vertex signs present. */
OmniQT difsi_normalize(const OmniQT& m);

/* M1 # (+-S) # M2 over P1 # I^n # P2; the cube insertion makes any pair
   summable. sum(sigma) = sum1 + sum2. */
OmniQT box_sum(const OmniQT& m1, const OmniQT& m2);

/* Cobordism-class addition: box_sum with all choices automatic. */
OmniQT add_cobordism(const OmniQT& m1, const OmniQT& m2);

/* A polygon realization of a 2-dimensional combinatorial type, in
   normal form, labels matching exactly. */
HPolytope realize_polygon(const CombPolytope& p);

/* Builders. All attach geometry in normal form, orientation +1 except
   where noted, and geometric signs. */

/* Complex projective space structure over the n-simplex. */
OmniQT cp(int n);

/* Simplex structure with refined column eps in {+-1}^n. */
OmniQT cp_eps(int n, const std::vector<int>& eps);

/* Tower structure over the n-cube; d lists the subdiagonal twisting
   integers d(i,j) for j = 2..n, i = 1..j-1, in that order. */
OmniQT bott_tower(int n, const std::vector<Int>& d);

/* Tower with d(i,j) = 1 exactly when i = j-1. */
OmniQT bounded_flag(int n);

/* Product of n standard 2-spheres with the bounding structure
   (lambda* = +I): signs alternate as (-1)^(number of top facets). */
OmniQT s_product(int n);

/* Structure over I^r x Delta(s-1), 1 <= r < s, with the standard
   tower-like column block. */
OmniQT b_rs(int r, int s);

}  // namespace qtoric
