#pragma once

#include "qtoric/lattice.hpp"
#include "qtoric/polytope.hpp"
#include "qtoric/quasitoric.hpp"
#include "qtoric/rational.hpp"

#include <map>
#include <vector>

namespace qtoric {

/* Presentation of the even cohomology ring: one degree-2 generator per
   facet, linear relations from the rows of the characteristic matrix,
   monomial relations from the minimal non-faces of the dual complex.
   The first `dim` generators are eliminated through the linear
   relations, so classes live in the generators dim+1..num_facets. */
struct RingPresentation {
  int dim = 0;
  int num_facets = 0;
  IMat lambda;
  std::vector<std::vector<int>> non_faces;
  std::vector<std::vector<int>> vertex_sets;
  SignMap signs;

  int reduced_vars() const { return num_facets - dim; }
};

/* Throws ScaleLimit above 14 facets or dimension 4. */
RingPresentation ring_presentation(const OmniQT& m);

/* Subsets of facet labels with no common vertex whose proper subsets
   all have one; sizes range over 2..dim+1. */
std::vector<std::vector<int>> minimal_non_faces(const CombPolytope& p);

/* Homogeneous class of topological degree 2*degree, written in the
   surviving generators; keys are exponent vectors of length
   reduced_vars(). */
struct CohClass {
  int degree = 0;
  std::map<std::vector<int>, Rat> terms;
};

CohClass zero_class(const RingPresentation& r, int degree);
CohClass one_class(const RingPresentation& r);
/* The class of the i-th facet generator, 1-based, i <= num_facets. */
CohClass generator_class(const RingPresentation& r, int i);
CohClass add(const CohClass& a, const CohClass& b);
CohClass scale(const CohClass& a, const Rat& s);
CohClass multiply(const CohClass& a, const CohClass& b);
CohClass power(const RingPresentation& r, const CohClass& a, int k);
/* k-th elementary symmetric polynomial in all facet generators. */
CohClass chern_class(const RingPresentation& r, int k);
/* Product of the classes of the facets in `vertex`. */
CohClass vertex_monomial(const RingPresentation& r,
                         const std::vector<int>& vertex);

/* One graded slice of the quotient ring: monomials of the given total
   degree, listed lexicographically descending, with an exact echelon
   of the relation rows. The quotient basis is the non-pivot monomials. */
class GradedPiece {
 public:
  GradedPiece(const RingPresentation& r, int degree);

  int degree() const { return degree_; }
  int ambient_dim() const { return static_cast<int>(monomials_.size()); }
  int quotient_dim() const;
  const std::vector<std::vector<int>>& monomials() const { return monomials_; }
  std::vector<std::vector<int>> quotient_basis() const;
  /* Coefficients on monomials() after reduction; supported only on
     non-pivot columns. Throws WrongDimension on a degree mismatch. */
  QVec reduce(const CohClass& a) const;

 private:
  int degree_;
  std::vector<std::vector<int>> monomials_;
  std::map<std::vector<int>, int> index_;
  std::map<int, QVec> rows_;  // pivot column -> row, pivot normalized to 1

  void insert_row(QVec row);
  void reduce_in_place(QVec& row) const;
};

/* Ranks of the graded pieces in degrees 0..dim. */
std::vector<int> betti_numbers(const RingPresentation& r);

/* Pairing of a top-degree class with the fundamental class fixed by
   the omniorientation. Normalization runs through the lexicographically
   first vertex whose monomial survives in the top piece; the optional
   out-parameter records it for reproducibility. Throws
   TopDegreeNotRankOne when the top piece does not have rank one. */
Rat evaluate(const RingPresentation& r, const CohClass& a,
             std::vector<int>* reference_vertex = nullptr);

/* Product of Chern classes c_{ks[0]} * c_{ks[1]} * ... evaluated on
   the fundamental class; the entries must sum to dim. The result is
   asserted integral: a fractional value signals an upstream bug. */
Rat chern_number(const RingPresentation& r, const std::vector<int>& ks);

/* (c_1^2 + c_2) / 12; dimension 2 only. */
Rat todd_genus_dim2(const RingPresentation& r);

/* True when the Todd genus rules out an invariant almost complex
   algebraic structure; dimension 2 only. */
bool toric_obstruction(const RingPresentation& r);

}  // namespace qtoric
