#include "qtoric/cohomology.hpp"

#include "qtoric/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qtoric {

namespace {

constexpr int kMaxRingFacets = 14;
constexpr int kMaxRingDim = 4;

void monomials_rec(int vars, int remaining, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) + 1 == vars) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.push_back(e);
    monomials_rec(vars, remaining - e, cur, out);
    cur.pop_back();
  }
}

/* All exponent vectors of the given total degree, lex descending. */
std::vector<std::vector<int>> degree_monomials(int vars, int degree) {
  std::vector<std::vector<int>> out;
  if (vars == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  std::vector<int> cur;
  monomials_rec(vars, degree, cur, out);
  return out;
}

void subsets_rec(int max_label, int size, int start, std::vector<int>& cur,
                 const std::function<void(const std::vector<int>&)>& fn) {
  if (static_cast<int>(cur.size()) == size) {
    fn(cur);
    return;
  }
  for (int f = start; f <= max_label; ++f) {
    cur.push_back(f);
    subsets_rec(max_label, size, f + 1, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> minimal_non_faces(const CombPolytope& p) {
  auto is_face = [&](const std::vector<int>& s) {
    for (const auto& vs : p.vertex_sets)
      if (std::includes(vs.begin(), vs.end(), s.begin(), s.end())) return true;
    return false;
  };
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  for (int size = 2; size <= p.dim + 1; ++size)
    subsets_rec(p.num_facets, size, 1, cur, [&](const std::vector<int>& s) {
      if (is_face(s)) return;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) sub.push_back(s[i]);
        if (!is_face(sub)) return;  // a smaller non-face covers this one
      }
      out.push_back(s);
    });
  return out;
}

RingPresentation ring_presentation(const OmniQT& m) {
  validate_omniqt(m);
  if (m.num_facets() > kMaxRingFacets || m.dim() > kMaxRingDim)
    throw ScaleLimit("ring computations limited to " +
                     std::to_string(kMaxRingFacets) + " facets and dimension " +
                     std::to_string(kMaxRingDim));
  RingPresentation r;
  r.dim = m.dim();
  r.num_facets = m.num_facets();
  r.lambda = m.lambda;
  r.non_faces = minimal_non_faces(m.polytope);
  r.vertex_sets = m.polytope.vertex_sets;
  r.signs = m.signs;
  return r;
}

CohClass zero_class(const RingPresentation& r, int degree) {
  (void)r;
  CohClass c;
  c.degree = degree;
  return c;
}

CohClass one_class(const RingPresentation& r) {
  CohClass c;
  c.degree = 0;
  c.terms[std::vector<int>(r.reduced_vars(), 0)] = 1;
  return c;
}

CohClass generator_class(const RingPresentation& r, int i) {
  if (i < 1 || i > r.num_facets)
    throw BadParameters("generator index out of range");
  const int v = r.reduced_vars();
  CohClass c;
  c.degree = 1;
  if (i > r.dim) {
    std::vector<int> e(v, 0);
    e[i - r.dim - 1] = 1;
    c.terms[std::move(e)] = 1;
    return c;
  }
  /* Eliminated generator: u_i = -sum_j lambda[i][dim+j] u_{dim+j+1}. */
  for (int j = 0; j < v; ++j) {
    const Int coef = r.lambda[i - 1][r.dim + j];
    if (coef == 0) continue;
    std::vector<int> e(v, 0);
    e[j] = 1;
    c.terms[std::move(e)] = Rat(-coef);
  }
  return c;
}

CohClass add(const CohClass& a, const CohClass& b) {
  if (a.degree != b.degree)
    throw WrongDimension("cannot add classes of different degrees");
  CohClass c = a;
  for (const auto& [e, coef] : b.terms) {
    Rat& slot = c.terms[e];
    slot += coef;
    if (slot == 0) c.terms.erase(e);
  }
  return c;
}

CohClass scale(const CohClass& a, const Rat& s) {
  CohClass c;
  c.degree = a.degree;
  if (s == 0) return c;
  for (const auto& [e, coef] : a.terms) c.terms[e] = coef * s;
  return c;
}

CohClass multiply(const CohClass& a, const CohClass& b) {
  CohClass c;
  c.degree = a.degree + b.degree;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      Rat& slot = c.terms[e];
      slot += ca * cb;
      if (slot == 0) c.terms.erase(e);
    }
  return c;
}

CohClass power(const RingPresentation& r, const CohClass& a, int k) {
  if (k < 0) throw BadParameters("negative power");
  CohClass c = one_class(r);
  for (int i = 0; i < k; ++i) c = multiply(c, a);
  c.degree = a.degree * k;
  return c;
}

CohClass chern_class(const RingPresentation& r, int k) {
  if (k < 0 || k > r.num_facets)
    throw BadParameters("chern class index out of range");
  if (k == 0) return one_class(r);
  CohClass total = zero_class(r, k);
  std::vector<int> cur;
  subsets_rec(r.num_facets, k, 1, cur, [&](const std::vector<int>& s) {
    CohClass prod = one_class(r);
    for (int i : s) prod = multiply(prod, generator_class(r, i));
    total = add(total, prod);
  });
  return total;
}

CohClass vertex_monomial(const RingPresentation& r,
                         const std::vector<int>& vertex) {
  CohClass prod = one_class(r);
  for (int i : vertex) prod = multiply(prod, generator_class(r, i));
  return prod;
}

GradedPiece::GradedPiece(const RingPresentation& r, int degree)
    : degree_(degree) {
  if (degree < 0) throw BadParameters("negative degree");
  monomials_ = degree_monomials(r.reduced_vars(), degree);
  for (int i = 0; i < static_cast<int>(monomials_.size()); ++i)
    index_.emplace(monomials_[i], i);
  for (const auto& nf : r.non_faces) {
    const int gdeg = static_cast<int>(nf.size());
    if (gdeg > degree) continue;
    const CohClass gen = vertex_monomial(r, nf);
    for (const auto& mu : degree_monomials(r.reduced_vars(), degree - gdeg)) {
      QVec row(monomials_.size(), Rat(0));
      for (const auto& [e, coef] : gen.terms) {
        std::vector<int> prod(e.size());
        for (std::size_t k = 0; k < e.size(); ++k) prod[k] = e[k] + mu[k];
        row[index_.at(prod)] += coef;
      }
      insert_row(std::move(row));
    }
  }
}

void GradedPiece::reduce_in_place(QVec& row) const {
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (row[c] == 0) continue;
    auto it = rows_.find(static_cast<int>(c));
    if (it == rows_.end()) continue;
    const Rat factor = row[c];
    for (std::size_t k = c; k < row.size(); ++k) row[k] -= factor * it->second[k];
  }
}

void GradedPiece::insert_row(QVec row) {
  reduce_in_place(row);
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (row[c] == 0) continue;
    const Rat pivot = row[c];
    for (std::size_t k = c; k < row.size(); ++k) row[k] /= pivot;
    rows_.emplace(static_cast<int>(c), std::move(row));
    return;
  }
}

int GradedPiece::quotient_dim() const {
  return ambient_dim() - static_cast<int>(rows_.size());
}

std::vector<std::vector<int>> GradedPiece::quotient_basis() const {
  std::vector<std::vector<int>> out;
  for (int c = 0; c < ambient_dim(); ++c)
    if (!rows_.count(c)) out.push_back(monomials_[c]);
  return out;
}

QVec GradedPiece::reduce(const CohClass& a) const {
  if (a.degree != degree_)
    throw WrongDimension("class degree does not match the graded piece");
  QVec row(monomials_.size(), Rat(0));
  for (const auto& [e, coef] : a.terms) row[index_.at(e)] = coef;
  reduce_in_place(row);
  return row;
}

std::vector<int> betti_numbers(const RingPresentation& r) {
  std::vector<int> out;
  for (int d = 0; d <= r.dim; ++d)
    out.push_back(GradedPiece(r, d).quotient_dim());
  return out;
}

Rat evaluate(const RingPresentation& r, const CohClass& a,
             std::vector<int>* reference_vertex) {
  if (a.degree != r.dim)
    throw WrongDimension("only top-degree classes pair with the fundamental class");
  GradedPiece top(r, r.dim);
  if (top.quotient_dim() != 1) {
    std::ostringstream msg;
    msg << "top graded piece has rank " << top.quotient_dim();
    throw TopDegreeNotRankOne(msg.str());
  }
  const std::vector<int> basis_mono = top.quotient_basis().front();
  int basis_col = -1;
  for (int c = 0; c < top.ambient_dim(); ++c)
    if (top.monomials()[c] == basis_mono) {
      basis_col = c;
      break;
    }
  const Rat alpha = top.reduce(a)[basis_col];
  for (const auto& w : r.vertex_sets) {
    const Rat cw = top.reduce(vertex_monomial(r, w))[basis_col];
    if (cw != 0) {
      if (reference_vertex) *reference_vertex = w;
      return alpha * r.signs.at(w) / cw;
    }
  }
  throw TopDegreeNotRankOne("no vertex monomial pairs with the top class");
}

Rat chern_number(const RingPresentation& r, const std::vector<int>& ks) {
  int total = 0;
  for (int k : ks) total += k;
  if (total != r.dim)
    throw WrongDimension("chern class degrees must sum to the dimension");
  CohClass prod = one_class(r);
  for (int k : ks) prod = multiply(prod, chern_class(r, k));
  const Rat value = evaluate(r, prod);
  if (boost::multiprecision::denominator(value) != 1)
    throw Error("characteristic number came out fractional: " + format_rat(value));
  return value;
}

Rat todd_genus_dim2(const RingPresentation& r) {
  if (r.dim != 2) throw WrongDimension("todd genus shortcut needs dimension 2");
  const Rat c2 = chern_number(r, {2});
  const Rat c1_sq = chern_number(r, {1, 1});
  return (c1_sq + c2) / 12;
}

bool toric_obstruction(const RingPresentation& r) {
  return todd_genus_dim2(r) != 1;
}

}  // namespace qtoric
