#include "qtoric/quasitoric.hpp"

#include "qtoric/errors.hpp"
#include "qtoric/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace qtoric {

namespace {

std::string facet_list(const std::vector<int>& v) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << "}";
  return out.str();
}

Int lambda_det_at(const IMat& lambda, const std::vector<int>& vertex) {
  const std::size_t n = lambda.size();
  IMat block(n, IVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) block[i][k] = lambda[i][vertex[k] - 1];
  return imat_det(std::move(block));
}

}  // namespace

std::vector<int> OmniQT::initial_vertex() const {
  std::vector<int> v(dim());
  for (int i = 0; i < dim(); ++i) v[i] = i + 1;
  return v;
}

IMat OmniQT::lambda_star() const {
  const int n = dim();
  const int m = num_facets();
  IMat star(n, IVec(m - n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = n; j < m; ++j) star[i][j - n] = lambda[i][j];
  return star;
}

int OmniQT::sign_sum() const {
  int s = 0;
  for (const auto& [v, sigma] : signs) s += sigma;
  return s;
}

int OmniQT::q_plus() const {
  int c = 0;
  for (const auto& [v, sigma] : signs) c += sigma > 0;
  return c;
}

int OmniQT::q_minus() const {
  int c = 0;
  for (const auto& [v, sigma] : signs) c += sigma < 0;
  return c;
}

DicharReport validate_dichar(const CombPolytope& p, const IMat& lambda) {
  validate_comb(p);
  if (static_cast<int>(lambda.size()) != p.dim)
    throw WrongDimension("characteristic matrix must have dim rows");
  for (const IVec& row : lambda)
    if (static_cast<int>(row.size()) != p.num_facets)
      throw WrongDimension("characteristic matrix must have one column per facet");
  DicharReport report;
  for (const auto& vs : p.vertex_sets) {
    const Int d = lambda_det_at(lambda, vs);
    if (d != 1 && d != -1) {
      report.ok = false;
      report.violations.push_back(DicharViolation{vs, d});
    }
  }
  return report;
}

bool is_refined(const IMat& lambda, int dim) {
  if (static_cast<int>(lambda.size()) != dim) return false;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (lambda[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

void validate_omniqt(const OmniQT& m) {
  validate_comb(m.polytope);
  if (!is_refined(m.lambda, m.dim()))
    throw BadParameters("characteristic matrix is not in refined form");
  if (m.signs.size() != m.polytope.vertex_sets.size())
    throw BadParameters("sign map does not cover the vertices");
  for (const auto& vs : m.polytope.vertex_sets) {
    auto it = m.signs.find(vs);
    if (it == m.signs.end())
      throw BadParameters("missing sign for vertex " + facet_list(vs));
    if (it->second != 1 && it->second != -1)
      throw BadParameters("sign must be +-1 at vertex " + facet_list(vs));
  }
  if (std::find(m.polytope.vertex_sets.begin(), m.polytope.vertex_sets.end(),
                m.initial_vertex()) == m.polytope.vertex_sets.end())
    throw BadParameters("polytope is not finely ordered");
  if (m.geometry && m.geometry->comb() != m.polytope)
    throw BadParameters("geometry disagrees with the combinatorial type");
}

namespace {

IMat permute_columns(const IMat& lambda, const std::vector<int>& perm) {
  IMat out(lambda.size(), IVec(lambda.empty() ? 0 : lambda[0].size(), 0));
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t j = 0; j < lambda[i].size(); ++j)
      out[i][perm[j] - 1] = lambda[i][j];
  return out;
}

SignMap relabel_signs(const SignMap& signs, const std::vector<int>& perm) {
  SignMap out;
  for (const auto& [vs, sigma] : signs) {
    std::vector<int> nv;
    nv.reserve(vs.size());
    for (int f : vs) nv.push_back(perm[f - 1]);
    std::sort(nv.begin(), nv.end());
    out.emplace(std::move(nv), sigma);
  }
  return out;
}

}  // namespace

OmniQT refine_at(const OmniQT& m, const std::vector<int>& vertex) {
  const int n = m.dim();
  if (std::find(m.polytope.vertex_sets.begin(), m.polytope.vertex_sets.end(),
                vertex) == m.polytope.vertex_sets.end())
    throw NotAVertex(facet_list(vertex) + " is not a vertex");

  const std::vector<int> perm =
      fine_order_permutation(m.num_facets(), vertex);
  OmniQT out;
  out.polytope = apply_facet_permutation(m.polytope, perm);
  IMat permuted = permute_columns(m.lambda, perm);
  IMat block(n, IVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) block[i][j] = permuted[i][j];
  const IMat g = unimodular_inverse(block);  // throws NotUnimodular
  out.lambda = imat_mul(g, permuted);
  out.signs = relabel_signs(m.signs, perm);

  if (m.geometry) {
    const HPolytope permuted_geo = apply_facet_permutation(*m.geometry, perm);
    QMatrix b0(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b0(i, j) = permuted_geo.halfspaces[i].normal[j];
    out.geometry = normal_form(permuted_geo);
    if (m.orientation)
      out.orientation = *m.orientation * static_cast<int>(imat_det(block)) *
                        sign_of(det(b0));
  }
  assert(validate_dichar(out.polytope, out.lambda).ok);
  return out;
}

std::pair<CombPolytope, IMat> refine(const CombPolytope& p, const IMat& lambda,
                                     const std::vector<int>& vertex) {
  if (std::find(p.vertex_sets.begin(), p.vertex_sets.end(), vertex) ==
      p.vertex_sets.end())
    throw NotAVertex(facet_list(vertex) + " is not a vertex");
  const std::vector<int> perm = fine_order_permutation(p.num_facets, vertex);
  CombPolytope np = apply_facet_permutation(p, perm);
  IMat permuted = permute_columns(lambda, perm);
  const int n = p.dim;
  IMat block(n, IVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) block[i][j] = permuted[i][j];
  return {std::move(np), imat_mul(unimodular_inverse(block), permuted)};
}

KernelLattice kernel_lattice(const IMat& lambda) {
  if (lambda.empty()) throw BadParameters("empty characteristic matrix");
  const std::size_t m = lambda[0].size();
  const SmithResult snf = smith_normal_form(lambda);
  IMat basis;
  for (std::size_t j = snf.rank; j < m; ++j) {
    IVec v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = snf.v[i][j];
    basis.push_back(std::move(v));
  }
  basis = hermite_row_form(std::move(basis));
  /* Kernel membership and saturation are structural here, but cheap. */
  for (const IVec& v : basis)
    for (const IVec& row : lambda) {
      Int s = 0;
      for (std::size_t k = 0; k < m; ++k) s += row[k] * v[k];
      if (s != 0) throw Error("kernel basis vector fails annihilation");
    }
  if (!basis.empty()) {
    const SmithResult check = smith_normal_form(basis);
    for (std::size_t i = 0; i < check.rank; ++i)
      if (check.d[i][i] != 1) throw Error("kernel basis is not saturated");
    if (check.rank != basis.size()) throw Error("kernel basis is degenerate");
  }
  return KernelLattice{std::move(basis)};
}

SignMap signs_geometric(const OmniQT& m, Orientation orientation) {
  if (!m.geometry) throw NoGeometry("no geometric realization attached");
  if (orientation != 1 && orientation != -1)
    throw BadParameters("orientation must be +-1");
  SignMap out;
  for (const auto& vs : m.polytope.vertex_sets) {
    const Int d = lambda_det_at(m.lambda, vs);
    if (d != 1 && d != -1)
      throw NotUnimodular("characteristic block at " + facet_list(vs) +
                          " has determinant " + std::to_string(d));
    const int e = orientation_at_vertex(*m.geometry, vs);
    out[vs] = orientation * e * static_cast<int>(d);
  }
  return out;
}

OmniQT with_geometric_signs(OmniQT m, Orientation orientation) {
  m.signs = signs_geometric(m, orientation);
  m.orientation = orientation;
  return m;
}

OmniQT reverse_orientation(OmniQT m) {
  for (auto& [vs, sigma] : m.signs) sigma = -sigma;
  if (m.orientation) m.orientation = -*m.orientation;
  return m;
}

OmniQT conjugate_facet(const OmniQT& m, int j) {
  const int n = m.dim();
  if (j < 1 || j > m.num_facets())
    throw BadParameters("facet index out of range");
  OmniQT out = m;
  for (auto& row : out.lambda) row[j - 1] = -row[j - 1];
  if (j <= n) {
    /* Restore refined form: negating row j of the whole matrix undoes
       the sign in column j and flips the orientation of the torus basis. */
    for (std::size_t k = 0; k < out.lambda[j - 1].size(); ++k)
      out.lambda[j - 1][k] = -out.lambda[j - 1][k];
    if (out.orientation) out.orientation = -*out.orientation;
  }
  for (auto& [vs, sigma] : out.signs)
    if (std::binary_search(vs.begin(), vs.end(), j)) sigma = -sigma;
  return out;
}

namespace {

/* Connected sum plus a record of which side each result vertex came from. */
struct TrackedSum {
  OmniQT m;
  std::map<std::vector<int>, int> side;  // result vertex -> 1 or 2
};

TrackedSum connected_sum_tracked(const OmniQT& m1, const OmniQT& m2) {
  validate_omniqt(m1);
  validate_omniqt(m2);
  const int n = m1.dim();
  if (m2.dim() != n)
    throw WrongDimension("summands must have equal dimension");
  if (n < 2) throw DimensionTooLow("connected sum needs dimension >= 2");
  const std::vector<int> vstar = m1.initial_vertex();
  const int s1 = m1.signs.at(vstar);
  const int s2 = m2.signs.at(vstar);
  if (s1 == s2)
    throw SignClash("both initial vertices have sign " + std::to_string(s1));

  const int mf1 = m1.num_facets(), mf2 = m2.num_facets();
  const int mf = mf1 + mf2 - n;
  auto relabel2 = [&](int f) { return f <= n ? f : mf1 + f - n; };

  OmniQT glued;
  glued.polytope.dim = n;
  glued.polytope.num_facets = mf;
  std::map<std::vector<int>, int> side;
  for (const auto& vs : m1.polytope.vertex_sets) {
    if (vs == vstar) continue;
    glued.polytope.vertex_sets.push_back(vs);
    glued.signs[vs] = m1.signs.at(vs);
    side[vs] = 1;
  }
  for (const auto& vs : m2.polytope.vertex_sets) {
    if (vs == vstar) continue;
    std::vector<int> nv;
    for (int f : vs) nv.push_back(relabel2(f));
    std::sort(nv.begin(), nv.end());
    glued.signs[nv] = m2.signs.at(vs);
    side[nv] = 2;
    glued.polytope.vertex_sets.push_back(std::move(nv));
  }
  std::sort(glued.polytope.vertex_sets.begin(), glued.polytope.vertex_sets.end());

  glued.lambda.assign(n, IVec(mf, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < mf1; ++j) glued.lambda[i][j] = m1.lambda[i][j];
    for (int j = n; j < mf2; ++j)
      glued.lambda[i][relabel2(j + 1) - 1] = m2.lambda[i][j];
  }

  /* The first n facets no longer meet, so re-refine at the second
     vertex of the first summand (its lex-first surviving vertex). */
  std::vector<int> anchor;
  for (const auto& vs : glued.polytope.vertex_sets)
    if (side.at(vs) == 1) {
      anchor = vs;
      break;
    }
  assert(!anchor.empty());
  const std::vector<int> perm = fine_order_permutation(mf, anchor);
  TrackedSum out;
  out.m = glued;
  out.m.polytope = apply_facet_permutation(glued.polytope, perm);
  {
    IMat permuted = permute_columns(glued.lambda, perm);
    IMat block(n, IVec(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) block[i][j] = permuted[i][j];
    out.m.lambda = imat_mul(unimodular_inverse(block), permuted);
  }
  out.m.signs = relabel_signs(glued.signs, perm);
  for (const auto& [vs, sd] : side) {
    std::vector<int> nv;
    for (int f : vs) nv.push_back(perm[f - 1]);
    std::sort(nv.begin(), nv.end());
    out.side.emplace(std::move(nv), sd);
  }

  const DicharReport rep = validate_dichar(out.m.polytope, out.m.lambda);
  if (!rep.ok) throw Error("connected sum produced an invalid dicharacteristic");
  assert(out.m.num_vertices() == m1.num_vertices() + m2.num_vertices() - 2);
  assert(out.m.sign_sum() == m1.sign_sum() + m2.sign_sum());

  if (n == 2) {
    out.m.geometry = realize_polygon(out.m.polytope);
    out.m.orientation = out.m.signs.at(out.m.initial_vertex());
    assert(signs_geometric(out.m, *out.m.orientation) == out.m.signs);
  }
  return out;
}

}  // namespace

OmniQT connected_sum(const OmniQT& m1, const OmniQT& m2) {
  return connected_sum_tracked(m1, m2).m;
}

OmniQT difsi_normalize(const OmniQT& m) {
  validate_omniqt(m);
  if (m.dim() < 2) throw DimensionTooLow("needs dimension >= 2");
  OmniQT s = s_product(m.dim());
  if (m.signs.at(m.initial_vertex()) == 1) s = reverse_orientation(s);
  return connected_sum(s, m);
}

OmniQT box_sum(const OmniQT& m1, const OmniQT& m2) {
  validate_omniqt(m1);
  validate_omniqt(m2);
  const int n = m1.dim();
  if (m2.dim() != n)
    throw WrongDimension("summands must have equal dimension");
  if (n < 2) throw DimensionTooLow("box sum needs dimension >= 2");

  OmniQT s = s_product(n);
  if (m1.signs.at(m1.initial_vertex()) == 1) s = reverse_orientation(s);
  TrackedSum t = connected_sum_tracked(m1, s);

  /* Re-fine-order at a cube-derived vertex of sign opposite to the
     initial vertex of m2; the cube leftovers always contain both signs. */
  const int want = -m2.signs.at(m2.initial_vertex());
  std::vector<int> anchor;
  for (const auto& vs : t.m.polytope.vertex_sets)
    if (t.side.at(vs) == 2 && t.m.signs.at(vs) == want) {
      anchor = vs;
      break;
    }
  assert(!anchor.empty());
  const OmniQT mid = refine_at(t.m, anchor);
  OmniQT out = connected_sum(mid, m2);
  assert(out.sign_sum() == m1.sign_sum() + m2.sign_sum());
  assert(out.num_facets() == m1.num_facets() + m2.num_facets());
  return out;
}

OmniQT add_cobordism(const OmniQT& m1, const OmniQT& m2) {
  OmniQT out = box_sum(m1, m2);
  assert(out.sign_sum() == m1.sign_sum() + m2.sign_sum());
  return out;
}

HPolytope realize_polygon(const CombPolytope& p) {
  validate_comb(p);
  if (p.dim != 2) throw WrongDimension("polygon realization needs dim 2");
  const int m = p.num_facets;
  std::vector<std::vector<int>> at_facet(m + 1);
  for (int vi = 0; vi < static_cast<int>(p.vertex_sets.size()); ++vi)
    for (int f : p.vertex_sets[vi]) at_facet[f].push_back(vi);
  for (int f = 1; f <= m; ++f)
    if (at_facet[f].size() != 2)
      throw BadParameters("facet " + std::to_string(f) +
                          " does not bound exactly two vertices");
  std::vector<int> vstar = {1, 2};
  if (std::find(p.vertex_sets.begin(), p.vertex_sets.end(), vstar) ==
      p.vertex_sets.end())
    throw BadParameters("polygon is not finely ordered");

  /* Walk the boundary cycle starting along facets 1, 2. */
  std::vector<int> cycle = {1, 2};
  std::set<int> used = {1, 2};
  std::vector<int> prev_vertex;
  {
    prev_vertex = vstar;
  }
  while (static_cast<int>(cycle.size()) < m) {
    const int f = cycle.back();
    bool advanced = false;
    for (int vi : at_facet[f]) {
      const auto& vs = p.vertex_sets[vi];
      if (vs == prev_vertex) continue;
      const int next = vs[0] == f ? vs[1] : vs[0];
      if (used.count(next))
        throw BadParameters("facet adjacency is not a single cycle");
      cycle.push_back(next);
      used.insert(next);
      prev_vertex = vs;
      advanced = true;
      break;
    }
    if (!advanced) throw BadParameters("facet adjacency is not a single cycle");
  }
  {
    /* The cycle must close through the remaining vertex of facet 1. */
    std::vector<int> closing = {std::min(cycle.back(), cycle.front()),
                                std::max(cycle.back(), cycle.front())};
    if (std::find(p.vertex_sets.begin(), p.vertex_sets.end(), closing) ==
        p.vertex_sets.end())
      throw BadParameters("facet adjacency is not a single cycle");
  }

  /* Vertices on the parabola t -> (t, t^2): p_k carries facets
     cycle[k], cycle[k+1]; the closing chord is the edge of cycle[0]. */
  std::vector<QVec> pts(m);
  QVec centroid(2, Rat(0));
  for (int k = 0; k < m; ++k) {
    pts[k] = {Rat(k), Rat(k) * Rat(k)};
    centroid[0] += pts[k][0];
    centroid[1] += pts[k][1];
  }
  centroid[0] /= m;
  centroid[1] /= m;

  HPolytope out;
  out.dim = 2;
  out.halfspaces.resize(m);
  auto edge_halfspace = [&](const QVec& a, const QVec& b) {
    HalfSpace h;
    h.normal = {-(b[1] - a[1]), b[0] - a[0]};
    h.offset = -(h.normal[0] * a[0] + h.normal[1] * a[1]);
    if (h.normal[0] * centroid[0] + h.normal[1] * centroid[1] + h.offset < 0) {
      h.normal[0] = -h.normal[0];
      h.normal[1] = -h.normal[1];
      h.offset = -h.offset;
    }
    return h;
  };
  for (int k = 0; k < m; ++k) {
    const int label = cycle[k];
    const QVec& a = pts[(k + m - 1) % m];
    const QVec& b = pts[k];
    out.halfspaces[label - 1] = edge_halfspace(a, b);
  }
  for (int k = 0; k < m; ++k) {
    PVertex v;
    v.facets = {std::min(cycle[k], cycle[(k + 1) % m]),
                std::max(cycle[k], cycle[(k + 1) % m])};
    v.point = pts[k];
    out.vertices.push_back(std::move(v));
  }
  std::sort(out.vertices.begin(), out.vertices.end(),
            [](const PVertex& a, const PVertex& b) { return a.facets < b.facets; });
  out = normal_form(out);
  if (out.comb() != p) throw Error("polygon realization failed to match");
  return out;
}

namespace {

HPolytope simplex_geometry(int n) {
  std::vector<HalfSpace> hs;
  for (int i = 0; i < n; ++i) {
    HalfSpace h;
    h.normal.assign(n, Rat(0));
    h.normal[i] = 1;
    h.offset = 0;
    hs.push_back(std::move(h));
  }
  HalfSpace top;
  top.normal.assign(n, Rat(-1));
  top.offset = 1;
  hs.push_back(std::move(top));
  return vertices_from_halfspaces(std::move(hs));
}

HPolytope interval_geometry() {
  HalfSpace lo{{Rat(1)}, Rat(0)};
  HalfSpace hi{{Rat(-1)}, Rat(1)};
  return vertices_from_halfspaces({lo, hi});
}

HPolytope cube_geometry(int n) {
  HPolytope c = interval_geometry();
  for (int i = 1; i < n; ++i) c = product(c, interval_geometry());
  return c;
}

OmniQT assemble(HPolytope geometry, IMat lambda) {
  OmniQT m;
  m.geometry = std::move(geometry);
  m.polytope = m.geometry->comb();
  m.lambda = std::move(lambda);
  const DicharReport rep = validate_dichar(m.polytope, m.lambda);
  if (!rep.ok)
    throw NotUnimodular("builder produced an invalid dicharacteristic");
  return with_geometric_signs(std::move(m), 1);
}

IMat refined_with_star(int n, const IMat& star) {
  IMat lambda(n, IVec(n + (star.empty() ? 0 : star[0].size()), 0));
  for (int i = 0; i < n; ++i) {
    lambda[i][i] = 1;
    for (std::size_t j = 0; j < star[i].size(); ++j)
      lambda[i][n + j] = star[i][j];
  }
  return lambda;
}

}  // namespace

OmniQT cp(int n) {
  if (n < 1) throw BadParameters("cp needs n >= 1");
  IMat star(n, IVec(1, -1));
  return assemble(simplex_geometry(n), refined_with_star(n, star));
}

OmniQT cp_eps(int n, const std::vector<int>& eps) {
  if (n < 1) throw BadParameters("cp_eps needs n >= 1");
  if (static_cast<int>(eps.size()) != n)
    throw BadParameters("eps must have n entries");
  IMat star(n, IVec(1));
  for (int i = 0; i < n; ++i) {
    if (eps[i] != 1 && eps[i] != -1)
      throw BadParameters("eps entries must be +-1");
    star[i][0] = eps[i];
  }
  return assemble(simplex_geometry(n), refined_with_star(n, star));
}

OmniQT bott_tower(int n, const std::vector<Int>& d) {
  if (n < 1) throw BadParameters("bott_tower needs n >= 1");
  if (static_cast<int>(d.size()) != n * (n - 1) / 2)
    throw BadParameters("bott_tower needs n(n-1)/2 twisting integers");
  IMat star(n, IVec(n, 0));
  std::size_t idx = 0;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) star[j - 1][i - 1] = d[idx++];
  for (int j = 0; j < n; ++j) star[j][j] = -1;
  return assemble(cube_geometry(n), refined_with_star(n, star));
}

OmniQT bounded_flag(int n) {
  std::vector<Int> d(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
  std::size_t idx = 0;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) d[idx++] = (i == j - 1) ? 1 : 0;
  return bott_tower(n, d);
}

OmniQT s_product(int n) {
  if (n < 1) throw BadParameters("s_product needs n >= 1");
  IMat star(n, IVec(n, 0));
  for (int j = 0; j < n; ++j) star[j][j] = 1;
  return assemble(cube_geometry(n), refined_with_star(n, star));
}

OmniQT b_rs(int r, int s) {
  if (r < 1 || s <= r) throw BadParameters("b_rs needs 1 <= r < s");
  const int n = r + s - 1;
  /* Block column: two stacked copies of the lower bidiagonal J_r
     (diagonal -1, subdiagonal +1) and a final -1 column. */
  IMat star(n, IVec(r + 1, 0));
  for (int i = 0; i < r; ++i) {
    star[i][i] = -1;
    if (i + 1 < r) star[i + 1][i] = 1;
    star[r + i][i] = -1;
    if (i + 1 < r) star[r + i + 1][i] = 1;
  }
  for (int i = r; i < n; ++i) star[i][r] = -1;
  HPolytope geo = product(cube_geometry(r), simplex_geometry(s - 1));
  return assemble(std::move(geo), refined_with_star(n, star));
}

}  // namespace qtoric
