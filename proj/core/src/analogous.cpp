#include "qtoric/analogous.hpp"

#include "qtoric/errors.hpp"

#include <cassert>

namespace qtoric {

CMatrix c_matrix(const HPolytope& p) {
  if (!p.is_normal_form())
    throw NotNormalForm("c_matrix requires the polytope in normal form");
  const int n = p.dim;
  const int m = p.num_facets();
  QMatrix c(m - n, m);
  for (int j = 0; j < m - n; ++j) {
    for (int i = 0; i < n; ++i) c(j, i) = -p.halfspaces[n + j].normal[i];
    c(j, n + j) = 1;
  }
  return CMatrix{std::move(c)};
}

QVec support_distances(const HPolytope& p, const ShiftVector& h) {
  const int n = p.dim;
  const int m = p.num_facets();
  if (static_cast<int>(h.h.size()) != m)
    throw WrongDimension("shift vector must have one entry per facet");
  QMatrix a(n, n);
  QVec rhs(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = p.halfspaces[i].normal[j];
    rhs[i] = -(p.halfspaces[i].offset + h.h[i]);
  }
  const auto corner = solve_square(std::move(a), std::move(rhs));
  if (!corner)
    throw DegenerateCorner("the first n shifted hyperplanes do not meet in a point");
  QVec d(m);
  for (int i = 0; i < m; ++i) {
    Rat s = p.halfspaces[i].offset + h.h[i];
    for (int j = 0; j < n; ++j) s += p.halfspaces[i].normal[j] * (*corner)[j];
    d[i] = s;
  }
  for (int i = 0; i < n; ++i) assert(d[i].is_zero());
  return d;
}

std::string to_string(ShiftClass c) {
  switch (c) {
    case ShiftClass::Actual: return "Actual";
    case ShiftClass::Degenerate: return "Degenerate";
    case ShiftClass::Empty: return "Empty";
  }
  return "?";
}

ShiftClass classify_shift(const HPolytope& p, const ShiftVector& h) {
  if (h.h.size() != p.halfspaces.size())
    throw WrongDimension("shift vector must have one entry per facet");
  std::vector<HalfSpace> shifted = p.halfspaces;
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i].offset += h.h[i];
  try {
    const HPolytope q = vertices_from_halfspaces(std::move(shifted));
    return q.comb() == p.comb() ? ShiftClass::Actual : ShiftClass::Degenerate;
  } catch (const Empty&) {
    return ShiftClass::Empty;
  } catch (const NotSimple&) {
    return ShiftClass::Degenerate;  // nonempty: a witness point exists
  } catch (const Redundant&) {
    return ShiftClass::Degenerate;  // some facet slid off the boundary
  }
}

ShiftVector minkowski_add(const HPolytope& p, const ShiftVector& h1,
                          const ShiftVector& h2) {
  if (h1.h.size() != p.halfspaces.size() || h2.h.size() != p.halfspaces.size())
    throw WrongDimension("shift vectors must have one entry per facet");
  ShiftVector out;
  out.h.resize(p.halfspaces.size());
  for (std::size_t i = 0; i < out.h.size(); ++i)
    out.h[i] = h1.h[i] + h2.h[i] + p.halfspaces[i].offset;
  return out;
}

FaceRankReport face_rank_check(const CMatrix& c, const CombPolytope& p) {
  const std::size_t m = c.num_cols();
  if (static_cast<int>(m) != p.num_facets)
    throw WrongDimension("C matrix and polytope facet counts differ");
  FaceRankReport report;
  report.expected_rank = c.num_rows();
  for (const auto& level : face_poset(p))
    for (const auto& face : level) {
      std::vector<bool> deleted(m, false);
      for (int f : face) deleted[f - 1] = true;
      QMatrix sub(c.num_rows(), m - face.size());
      for (std::size_t i = 0; i < c.num_rows(); ++i) {
        std::size_t col = 0;
        for (std::size_t j = 0; j < m; ++j)
          if (!deleted[j]) sub(i, col++) = c.entries(i, j);
      }
      const std::size_t r = rank(std::move(sub));
      if (r != report.expected_rank) {
        report.ok = false;
        report.violations.push_back(FaceRankViolation{face, r});
      }
    }
  return report;
}

std::vector<QVec> framing_vectors(const HPolytope& p, const QVec& x) {
  if (static_cast<int>(x.size()) != p.dim)
    throw WrongDimension("point has wrong dimension");
  const QVec y = [&] {
    QVec v(p.num_facets());
    for (int i = 0; i < p.num_facets(); ++i) {
      Rat s = p.halfspaces[i].offset;
      for (int j = 0; j < p.dim; ++j) s += p.halfspaces[i].normal[j] * x[j];
      v[i] = s;
    }
    return v;
  }();
  for (std::size_t i = 0; i < y.size(); ++i)
    if (y[i] < 0)
      throw NotInPolytope("point violates half-space " + std::to_string(i + 1));
  const CMatrix c = c_matrix(p);
  std::vector<QVec> frame;
  for (std::size_t j = 0; j < c.num_rows(); ++j) {
    QVec f(y.size());
    for (std::size_t k = 0; k < y.size(); ++k) f[k] = c.entries(j, k) * y[k];
    frame.push_back(std::move(f));
  }
  return frame;
}

}  // namespace qtoric
