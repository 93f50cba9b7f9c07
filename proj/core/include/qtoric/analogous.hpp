#pragma once

#include "qtoric/polytope.hpp"

#include <string>
#include <vector>

namespace qtoric {

/* Per-facet offset perturbation h: the shifted system is A x + (b+h) >= 0. */
struct ShiftVector {
  QVec h;
};

/* The (m-n) x m matrix [-A* | I] whose rows kill the columns of A_P;
   its kernel recovers the affine hull of the embedded polytope. */
struct CMatrix {
  QMatrix entries;

  std::size_t num_rows() const { return entries.rows(); }
  std::size_t num_cols() const { return entries.cols(); }
};

/* Requires normal form. Throws NotNormalForm. */
CMatrix c_matrix(const HPolytope& p);

/* Distances d_i(h) of the shifted facets from the shifted initial corner
   v*(h); identically zero on the first n coordinates. */
QVec support_distances(const HPolytope& p, const ShiftVector& h);

enum class ShiftClass { Actual, Degenerate, Empty };

std::string to_string(ShiftClass c);

/* Actual: same vertex sets as P. Degenerate: nonempty but different.
   Empty: no feasible point. */
ShiftClass classify_shift(const HPolytope& p, const ShiftVector& h);

/* Offsets of the Minkowski sum of the polytopes shifted by h1 and h2,
   expressed again as a shift of P: h1 + h2 + b_P. */
ShiftVector minkowski_add(const HPolytope& p, const ShiftVector& h1,
                          const ShiftVector& h2);

struct FaceRankViolation {
  std::vector<int> face;
  std::size_t rank;
};

struct FaceRankReport {
  bool ok = true;
  std::size_t expected_rank = 0;
  std::vector<FaceRankViolation> violations;
};

/* Deleting the columns of any face must leave the row rank at m-n. */
FaceRankReport face_rank_check(const CMatrix& c, const CombPolytope& p);

/* Rows of C weighted componentwise by the embedded point A x + b.
   Throws NotInPolytope when x violates some inequality. */
std::vector<QVec> framing_vectors(const HPolytope& p, const QVec& x);

}  // namespace qtoric
