#include "qtoric/moment_angle.hpp"

#include "qtoric/errors.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cassert>
#include <cmath>

namespace qtoric {

QuadraticSystem quadratic_system(const HPolytope& p) {
  const CMatrix c = c_matrix(p);  // enforces normal form
  const QVec b = p.b_vector();
  QuadraticSystem sys;
  sys.num_complex_vars = p.num_facets();
  for (std::size_t j = 0; j < c.num_rows(); ++j) {
    QuadraticEquation eq;
    eq.coeffs = c.entries.row(j);
    for (std::size_t k = 0; k < eq.coeffs.size(); ++k)
      eq.constant += eq.coeffs[k] * b[k];
    sys.equations.push_back(std::move(eq));
  }
  return sys;
}

std::vector<std::complex<double>> sample_point(const HPolytope& p, const QVec& x,
                                               const std::vector<double>& angles) {
  const int m = p.num_facets();
  if (static_cast<int>(x.size()) != p.dim)
    throw WrongDimension("point has wrong dimension");
  if (static_cast<int>(angles.size()) != m)
    throw WrongDimension("need one phase per facet");
  std::vector<std::complex<double>> z(m);
  for (int k = 0; k < m; ++k) {
    Rat y = p.halfspaces[k].offset;
    for (int j = 0; j < p.dim; ++j) y += p.halfspaces[k].normal[j] * x[j];
    if (y < 0)
      throw NotInPolytope("point violates half-space " + std::to_string(k + 1));
    const double r = std::sqrt(to_double(y));
    z[k] = std::polar(r, angles[k]);
  }
  return z;
}

QVec sample_interior_point(const HPolytope& p, std::mt19937& rng) {
  const int n = p.dim;
  QVec lo(n), hi(n);
  for (int j = 0; j < n; ++j) {
    lo[j] = p.vertices[0].point[j];
    hi[j] = p.vertices[0].point[j];
  }
  for (const PVertex& v : p.vertices)
    for (int j = 0; j < n; ++j) {
      lo[j] = std::min(lo[j], v.point[j]);
      hi[j] = std::max(hi[j], v.point[j]);
    }
  const long denom = 1L << 20;
  std::uniform_int_distribution<long> dist(0, denom);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    QVec x(n);
    for (int j = 0; j < n; ++j)
      x[j] = lo[j] + (hi[j] - lo[j]) * Rat(dist(rng), denom);
    bool inside = true;
    for (const HalfSpace& h : p.halfspaces) {
      Rat s = h.offset;
      for (int j = 0; j < n; ++j) s += h.normal[j] * x[j];
      if (s < 0) {
        inside = false;
        break;
      }
    }
    if (inside) return x;
  }
  throw Error("rejection sampling failed to hit the polytope");
}

double max_residual(const QuadraticSystem& sys,
                    const std::vector<std::complex<double>>& z) {
  assert(static_cast<int>(z.size()) == sys.num_complex_vars);
  double worst = 0.0;
  for (const QuadraticEquation& eq : sys.equations) {
    double lhs = 0.0, scale = 0.0;
    for (std::size_t k = 0; k < eq.coeffs.size(); ++k) {
      const double c = to_double(eq.coeffs[k]);
      const double sq = std::norm(z[k]);
      lhs += c * sq;
      scale += std::abs(c) * sq;
    }
    const double rhs = to_double(eq.constant);
    scale = std::max(1.0, scale + std::abs(rhs));
    worst = std::max(worst, std::abs(lhs - rhs) / scale);
  }
  return worst;
}

JacobianReport jacobian_rank(const QuadraticSystem& sys,
                             const std::vector<std::complex<double>>& z) {
  if (static_cast<int>(z.size()) != sys.num_complex_vars)
    throw WrongDimension("point has wrong number of complex coordinates");
  const double res = max_residual(sys, z);
  if (res > kResidualTol)
    throw NotOnVariety("residual " + std::to_string(res) + " exceeds tolerance");

  const std::size_t rows = sys.equations.size();
  const std::size_t m = z.size();
  Eigen::MatrixXd jac(rows, 2 * m);
  for (std::size_t j = 0; j < rows; ++j)
    for (std::size_t k = 0; k < m; ++k) {
      const double c = to_double(sys.equations[j].coeffs[k]);
      jac(j, 2 * k) = 2.0 * c * z[k].real();
      jac(j, 2 * k + 1) = 2.0 * c * z[k].imag();
    }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
  JacobianReport report;
  report.expected = rows;
  for (int i = 0; i < svd.singularValues().size(); ++i) {
    const double s = svd.singularValues()(i);
    report.singular_values.push_back(s);
    if (s > kSvdCutoff) ++report.rank;
  }
  return report;
}

int dimension_check(const QuadraticSystem& sys) {
  const int m = sys.num_complex_vars;
  const int codim = static_cast<int>(sys.equations.size());
  return m + (m - codim);
}

}  // namespace qtoric
