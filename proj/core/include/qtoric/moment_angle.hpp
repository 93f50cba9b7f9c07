#pragma once

#include "qtoric/analogous.hpp"
#include "qtoric/polytope.hpp"

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace qtoric {

/* One real quadric  sum_k coeffs[k] * |z_k|^2 = constant. */
struct QuadraticEquation {
  QVec coeffs;
  Rat constant;

  bool operator==(const QuadraticEquation& o) const {
    return coeffs == o.coeffs && constant == o.constant;
  }
};

/* Intersection of m-n real quadrics in C^m cutting out the level set
   of the facet-distance embedding. */
struct QuadraticSystem {
  int num_complex_vars = 0;
  std::vector<QuadraticEquation> equations;

  bool operator==(const QuadraticSystem& o) const {
    return num_complex_vars == o.num_complex_vars && equations == o.equations;
  }
};

/* Residual tolerance (relative) accepted on sampled points, and the
   singular value cutoff for the numerical Jacobian rank. */
inline constexpr double kResidualTol = 1e-9;
inline constexpr double kSvdCutoff = 1e-8;

/* Rows are the rows of the C matrix; constants are C * b_P.
   Requires normal form. */
QuadraticSystem quadratic_system(const HPolytope& p);

/* Lift of a point x in P with the given phases: z_k = sqrt(y_k) e^{i t_k}
   where y = A x + b. Throws NotInPolytope, WrongDimension. */
std::vector<std::complex<double>> sample_point(const HPolytope& p, const QVec& x,
                                               const std::vector<double>& angles);

/* Exact rational point of P, uniform via rejection from the bounding
   box of the vertices; deterministic in the generator state. */
QVec sample_interior_point(const HPolytope& p, std::mt19937& rng);

/* Largest relative residual of z over all equations. */
double max_residual(const QuadraticSystem& sys,
                    const std::vector<std::complex<double>>& z);

struct JacobianReport {
  std::size_t rank = 0;
  std::size_t expected = 0;
  std::vector<double> singular_values;
};

/* Numerical rank of the (m-n) x 2m Jacobian at z. Throws NotOnVariety
   when z misses the variety beyond kResidualTol. */
JacobianReport jacobian_rank(const QuadraticSystem& sys,
                             const std::vector<std::complex<double>>& z);

/* Real dimension of the ambient sphere-product model: m + n. */
int dimension_check(const QuadraticSystem& sys);

}  // namespace qtoric
