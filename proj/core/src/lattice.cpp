#include "qtoric/lattice.hpp"

#include "qtoric/errors.hpp"
#include "qtoric/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace qtoric {

IMat imat_identity(std::size_t n) {
  IMat m(n, IVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IMat imat_mul(const IMat& a, const IMat& b) {
  assert(!a.empty() && !b.empty() && a[0].size() == b.size());
  IMat c(a.size(), IVec(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

IMat imat_transposed(const IMat& a) {
  if (a.empty()) return {};
  IMat t(a[0].size(), IVec(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Int imat_det(IMat a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  assert(a[0].size() == n);
  Int sign = 1, prev = 1;
  for (std::size_t c = 0; c + 1 < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j)
        a[i][j] = (a[c][c] * a[i][j] - a[i][c] * a[c][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[c][c];
  }
  return sign * a[n - 1][n - 1];
}

IMat unimodular_inverse(const IMat& a) {
  const std::size_t n = a.size();
  const Int d = imat_det(a);
  if (d != 1 && d != -1)
    throw NotUnimodular("matrix determinant is " + std::to_string(d));
  QMatrix q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q(i, j) = a[i][j];
  const QMatrix qi = *inverse(q);
  IMat out(n, IVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      assert(denominator(qi(i, j)) == 1);
      out[i][j] = qi(i, j).convert_to<Int>();
    }
  return out;
}

namespace {

void row_op_sub(IMat& m, std::size_t dst, std::size_t src, Int f) {
  for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] -= f * m[src][j];
}

void col_op_sub(IMat& m, std::size_t dst, std::size_t src, Int f) {
  for (std::size_t i = 0; i < m.size(); ++i) m[i][dst] -= f * m[i][src];
}

}  // namespace

SmithResult smith_normal_form(const IMat& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  SmithResult res{imat_identity(rows), a, imat_identity(cols), 0};
  IMat& d = res.d;

  std::size_t t = 0;
  while (t < rows && t < cols) {
    /* Locate a nonzero entry of minimal magnitude in the remaining block. */
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (d[i][j] != 0 &&
            (!found || std::llabs(d[i][j]) < std::llabs(d[pi][pj]))) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    if (pi != t) {
      std::swap(d[pi], d[t]);
      std::swap(res.u[pi], res.u[t]);
    }
    if (pj != t) {
      for (std::size_t i = 0; i < rows; ++i) std::swap(d[i][pj], d[i][t]);
      for (std::size_t i = 0; i < cols; ++i) std::swap(res.v[i][pj], res.v[i][t]);
    }

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i)
      if (d[i][t] != 0) {
        const Int f = d[i][t] / d[t][t];
        row_op_sub(d, i, t, f);
        row_op_sub(res.u, i, t, f);
        if (d[i][t] != 0) clean = false;
      }
    for (std::size_t j = t + 1; j < cols; ++j)
      if (d[t][j] != 0) {
        const Int f = d[t][j] / d[t][t];
        col_op_sub(d, j, t, f);
        col_op_sub(res.v, j, t, f);
        if (d[t][j] != 0) clean = false;
      }
    if (!clean) continue;  // remainders left; pick a smaller pivot again

    /* Enforce the divisibility chain: fold any non-divisible entry in. */
    bool divides_all = true;
    for (std::size_t i = t + 1; i < rows && divides_all; ++i)
      for (std::size_t j = t + 1; j < cols && divides_all; ++j)
        if (d[i][j] % d[t][t] != 0) {
          row_op_sub(d, t, i, -1);
          row_op_sub(res.u, t, i, -1);
          divides_all = false;
        }
    if (!divides_all) continue;

    if (d[t][t] < 0) {
      for (std::size_t j = 0; j < cols; ++j) d[t][j] = -d[t][j];
      for (std::size_t j = 0; j < rows; ++j) res.u[t][j] = -res.u[t][j];
    }
    ++t;
  }
  res.rank = t;
  return res;
}

IMat hermite_row_form(IMat a) {
  if (a.empty()) return a;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    /* gcd-combine rows r..end to produce a single nonzero in column c. */
    std::size_t p = r;
    while (true) {
      std::size_t best = a.size();
      for (std::size_t i = r; i < a.size(); ++i)
        if (a[i][c] != 0 &&
            (best == a.size() || std::llabs(a[i][c]) < std::llabs(a[best][c])))
          best = i;
      if (best == a.size()) break;
      std::swap(a[r], a[best]);
      bool reduced_all = true;
      for (std::size_t i = r + 1; i < a.size(); ++i)
        if (a[i][c] != 0) {
          row_op_sub(a, i, r, a[i][c] / a[r][c]);
          if (a[i][c] != 0) reduced_all = false;
        }
      if (reduced_all) {
        p = r;
        break;
      }
    }
    if (a[p][c] == 0) continue;
    if (a[r][c] < 0)
      for (std::size_t j = 0; j < cols; ++j) a[r][j] = -a[r][j];
    for (std::size_t i = 0; i < r; ++i) {
      /* floor-divide so entries above the pivot land in [0, pivot) */
      Int f = a[i][c] / a[r][c];
      if (a[i][c] % a[r][c] < 0) --f;
      if (f != 0) row_op_sub(a, i, r, f);
    }
    ++r;
  }
  a.resize(r);
  return a;
}

}  // namespace qtoric
