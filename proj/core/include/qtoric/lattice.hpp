#pragma once

#include <cstdint>
#include <vector>

namespace qtoric {

using Int = long long;
using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;  // row-major, rectangular

IMat imat_identity(std::size_t n);
IMat imat_mul(const IMat& a, const IMat& b);
IMat imat_transposed(const IMat& a);
Int imat_det(IMat a);  // Bareiss, fraction-free

/* Inverse of an integer matrix with det = ±1; throws NotUnimodular. */
IMat unimodular_inverse(const IMat& a);

/* U * input * V = D with U, V unimodular and D diagonal,
   d1 | d2 | ... | dr, nonnegative. */
struct SmithResult {
  IMat u, d, v;
  std::size_t rank;
};

SmithResult smith_normal_form(const IMat& a);

/* Canonical row-style Hermite form of the row lattice: pivots positive,
   entries above a pivot reduced into [0, pivot), zero rows dropped.
   Two integer matrices span the same row lattice iff their forms agree. */
IMat hermite_row_form(IMat a);

}  // namespace qtoric
