#include "qtoric/polytope.hpp"

#include "qtoric/errors.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

namespace qtoric {

namespace {

constexpr int kMaxFacets = 16;
constexpr int kMaxDim = 6;

std::string facet_list(const std::vector<int>& v) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << "}";
  return out.str();
}

/* Visits all size-k subsets of {0,...,m-1} in lexicographic order. */
template <typename F>
void for_each_subset(int m, int k, F&& visit) {
  if (k > m) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

CombPolytope HPolytope::comb() const {
  CombPolytope c;
  c.dim = dim;
  c.num_facets = num_facets();
  for (const PVertex& v : vertices) c.vertex_sets.push_back(v.facets);
  return c;
}

const PVertex* HPolytope::find_vertex(const std::vector<int>& facets) const {
  for (const PVertex& v : vertices)
    if (v.facets == facets) return &v;
  return nullptr;
}

bool HPolytope::is_finely_ordered() const {
  std::vector<int> initial(dim);
  for (int i = 0; i < dim; ++i) initial[i] = i + 1;
  return find_vertex(initial) != nullptr;
}

bool HPolytope::is_normal_form() const {
  if (!is_finely_ordered()) return false;
  for (int i = 0; i < dim; ++i) {
    if (!halfspaces[i].offset.is_zero()) return false;
    for (int j = 0; j < dim; ++j)
      if (halfspaces[i].normal[j] != Rat(i == j ? 1 : 0)) return false;
  }
  return true;
}

QMatrix HPolytope::a_matrix() const {
  QMatrix a(halfspaces.size(), dim);
  for (std::size_t i = 0; i < halfspaces.size(); ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = halfspaces[i].normal[j];
  return a;
}

QVec HPolytope::b_vector() const {
  QVec b(halfspaces.size());
  for (std::size_t i = 0; i < halfspaces.size(); ++i) b[i] = halfspaces[i].offset;
  return b;
}

void validate_comb(const CombPolytope& p) {
  if (p.dim < 1) throw BadParameters("dimension must be >= 1");
  if (p.num_facets < p.dim + 1)
    throw BadParameters("need at least dim+1 facets");
  if (p.vertex_sets.size() < static_cast<std::size_t>(p.dim) + 1)
    throw BadParameters("need at least dim+1 vertices");
  std::set<int> covered;
  for (const auto& vs : p.vertex_sets) {
    if (static_cast<int>(vs.size()) != p.dim)
      throw BadParameters("vertex set " + facet_list(vs) + " has wrong size");
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (vs[i] < 1 || vs[i] > p.num_facets)
        throw BadParameters("facet index out of range in " + facet_list(vs));
      if (i && vs[i] <= vs[i - 1])
        throw BadParameters("vertex set not strictly sorted: " + facet_list(vs));
      covered.insert(vs[i]);
    }
  }
  if (!std::is_sorted(p.vertex_sets.begin(), p.vertex_sets.end()))
    throw BadParameters("vertex sets not in lexicographic order");
  if (std::adjacent_find(p.vertex_sets.begin(), p.vertex_sets.end()) !=
      p.vertex_sets.end())
    throw BadParameters("duplicate vertex set");
  if (static_cast<int>(covered.size()) != p.num_facets)
    throw BadParameters("some facet lies in no vertex set");
}

namespace {

/* Canonicalize an inequality row up to positive scaling, for dedup. */
QVec normalize_row(QVec row) {
  for (const Rat& x : row)
    if (!x.is_zero()) {
      const Rat s = abs(x);
      for (Rat& y : row) y /= s;
      return row;
    }
  return row;
}

bool cone_trivial_rec(std::vector<QVec> rows, std::size_t nvars) {
  if (nvars == 0) return true;
  bool has_pos = false, has_neg = false;
  for (const QVec& r : rows) {
    if (r[0] > 0) has_pos = true;
    else if (r[0] < 0) has_neg = true;
  }
  /* Without both signs, +-e_1 itself satisfies every inequality. */
  if (!has_pos || !has_neg) return false;

  std::set<QVec> next;
  auto tail = [](const QVec& r) { return QVec(r.begin() + 1, r.end()); };
  for (const QVec& r : rows)
    if (r[0].is_zero()) {
      QVec t = normalize_row(tail(r));
      if (std::any_of(t.begin(), t.end(), [](const Rat& x) { return !x.is_zero(); }))
        next.insert(std::move(t));
    }
  for (const QVec& ri : rows) {
    if (!(ri[0] > 0)) continue;
    for (const QVec& rj : rows) {
      if (!(rj[0] < 0)) continue;
      QVec combo(ri.size() - 1);
      for (std::size_t k = 1; k < ri.size(); ++k)
        combo[k - 1] = ri[0] * rj[k] - rj[0] * ri[k];
      combo = normalize_row(std::move(combo));
      if (std::any_of(combo.begin(), combo.end(),
                      [](const Rat& x) { return !x.is_zero(); }))
        next.insert(std::move(combo));
    }
  }
  return cone_trivial_rec(std::vector<QVec>(next.begin(), next.end()),
                          nvars - 1);
}

}  // namespace

bool recession_cone_trivial(const QMatrix& a) {
  std::vector<QVec> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
  return cone_trivial_rec(std::move(rows), a.cols());
}

HPolytope vertices_from_halfspaces(std::vector<HalfSpace> halfspaces) {
  if (halfspaces.empty()) throw BadParameters("no half-spaces given");
  const int n = static_cast<int>(halfspaces[0].normal.size());
  const int m = static_cast<int>(halfspaces.size());
  if (n < 1) throw BadParameters("dimension must be >= 1");
  if (n > kMaxDim || m > kMaxFacets)
    throw ScaleLimit("half-space system exceeds the documented size limits");
  if (m < n) throw BadParameters("fewer half-spaces than dimensions");
  for (const HalfSpace& h : halfspaces) {
    if (static_cast<int>(h.normal.size()) != n)
      throw BadParameters("inconsistent normal lengths");
    if (std::all_of(h.normal.begin(), h.normal.end(),
                    [](const Rat& x) { return x.is_zero(); }))
      throw BadParameters("zero normal vector");
  }

  HPolytope p;
  p.dim = n;
  p.halfspaces = std::move(halfspaces);

  if (!recession_cone_trivial(p.a_matrix()))
    throw Unbounded("the half-space intersection has a nontrivial recession cone");

  auto eval = [&](int i, const QVec& x) {
    Rat s = p.halfspaces[i].offset;
    for (int j = 0; j < n; ++j) s += p.halfspaces[i].normal[j] * x[j];
    return s;
  };

  std::map<std::vector<int>, QVec> found;  // active set -> point
  for_each_subset(m, n, [&](const std::vector<int>& idx) {
    QMatrix a(n, n);
    QVec b(n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) a(r, c) = p.halfspaces[idx[r]].normal[c];
      b[r] = -p.halfspaces[idx[r]].offset;
    }
    auto x = solve_square(std::move(a), std::move(b));
    if (!x) return;
    std::vector<int> active;
    for (int i = 0; i < m; ++i) {
      const Rat v = eval(i, *x);
      if (v < 0) return;  // infeasible candidate
      if (v.is_zero()) active.push_back(i + 1);
    }
    if (static_cast<int>(active.size()) > n)
      throw NotSimple("point " + format_qvec(*x) + " lies on " +
                      std::to_string(active.size()) + " facets " +
                      facet_list(active));
    assert(static_cast<int>(active.size()) == n);
    found.emplace(std::move(active), std::move(*x));
  });

  if (found.empty()) throw Empty("the half-space intersection is empty");

  std::set<int> covered;
  for (const auto& [facets, point] : found) {
    p.vertices.push_back(PVertex{facets, point});
    covered.insert(facets.begin(), facets.end());
  }
  for (int i = 1; i <= m; ++i)
    if (!covered.count(i))
      throw Redundant(i, "half-space " + std::to_string(i) +
                             " supports no vertex and is redundant");
  assert(p.num_vertices() >= n + 1);
  return p;
}

std::vector<std::vector<std::vector<int>>> face_poset(const CombPolytope& p) {
  validate_comb(p);
  std::vector<std::vector<std::vector<int>>> poset(p.dim + 1);
  poset[0].push_back({});
  for (int k = 1; k <= p.dim; ++k) {
    std::set<std::vector<int>> faces;
    for (const auto& vs : p.vertex_sets)
      for_each_subset(p.dim, k, [&](const std::vector<int>& idx) {
        std::vector<int> face(k);
        for (int i = 0; i < k; ++i) face[i] = vs[idx[i]];
        faces.insert(std::move(face));
      });
    poset[k].assign(faces.begin(), faces.end());
  }
  return poset;
}

std::vector<int> fine_order_permutation(int num_facets,
                                        const std::vector<int>& vertex) {
  std::vector<int> perm(num_facets, 0);
  int next = 1;
  for (int f : vertex) perm[f - 1] = next++;
  for (int f = 1; f <= num_facets; ++f)
    if (perm[f - 1] == 0) perm[f - 1] = next++;
  return perm;
}

CombPolytope apply_facet_permutation(const CombPolytope& p,
                                     const std::vector<int>& perm) {
  CombPolytope out;
  out.dim = p.dim;
  out.num_facets = p.num_facets;
  for (const auto& vs : p.vertex_sets) {
    std::vector<int> nv;
    nv.reserve(vs.size());
    for (int f : vs) nv.push_back(perm[f - 1]);
    std::sort(nv.begin(), nv.end());
    out.vertex_sets.push_back(std::move(nv));
  }
  std::sort(out.vertex_sets.begin(), out.vertex_sets.end());
  return out;
}

HPolytope apply_facet_permutation(const HPolytope& p,
                                  const std::vector<int>& perm) {
  HPolytope out;
  out.dim = p.dim;
  out.halfspaces.resize(p.halfspaces.size());
  for (std::size_t i = 0; i < p.halfspaces.size(); ++i)
    out.halfspaces[perm[i] - 1] = p.halfspaces[i];
  for (const PVertex& v : p.vertices) {
    PVertex nv;
    nv.point = v.point;
    for (int f : v.facets) nv.facets.push_back(perm[f - 1]);
    std::sort(nv.facets.begin(), nv.facets.end());
    out.vertices.push_back(std::move(nv));
  }
  std::sort(out.vertices.begin(), out.vertices.end(),
            [](const PVertex& a, const PVertex& b) { return a.facets < b.facets; });
  return out;
}

CombPolytope fine_order(const CombPolytope& p, const std::vector<int>& vertex) {
  if (std::find(p.vertex_sets.begin(), p.vertex_sets.end(), vertex) ==
      p.vertex_sets.end())
    throw NotAVertex(facet_list(vertex) + " is not a vertex");
  return apply_facet_permutation(p, fine_order_permutation(p.num_facets, vertex));
}

HPolytope fine_order(const HPolytope& p, const std::vector<int>& vertex) {
  if (!p.find_vertex(vertex))
    throw NotAVertex(facet_list(vertex) + " is not a vertex");
  return apply_facet_permutation(p, fine_order_permutation(p.num_facets(), vertex));
}

namespace {

/* New label of a P facet (p_side) or Q facet in the product order. */
int product_relabel(bool p_side, int f, int n, int m, int nq) {
  if (p_side) return f <= n ? f : nq + f;
  return f <= nq ? n + f : m + f;
}

}  // namespace

CombPolytope product(const CombPolytope& p, const CombPolytope& q) {
  CombPolytope out;
  out.dim = p.dim + q.dim;
  out.num_facets = p.num_facets + q.num_facets;
  for (const auto& vp : p.vertex_sets)
    for (const auto& vq : q.vertex_sets) {
      std::vector<int> vs;
      for (int f : vp)
        vs.push_back(product_relabel(true, f, p.dim, p.num_facets, q.dim));
      for (int f : vq)
        vs.push_back(product_relabel(false, f, p.dim, p.num_facets, q.dim));
      std::sort(vs.begin(), vs.end());
      out.vertex_sets.push_back(std::move(vs));
    }
  std::sort(out.vertex_sets.begin(), out.vertex_sets.end());
  return out;
}

HPolytope product(const HPolytope& p, const HPolytope& q) {
  const int n = p.dim, nq = q.dim, m = p.num_facets(), mq = q.num_facets();
  HPolytope out;
  out.dim = n + nq;
  out.halfspaces.resize(m + mq);
  for (int i = 0; i < m; ++i) {
    HalfSpace h;
    h.normal = p.halfspaces[i].normal;
    h.normal.resize(n + nq, Rat(0));
    h.offset = p.halfspaces[i].offset;
    out.halfspaces[product_relabel(true, i + 1, n, m, nq) - 1] = std::move(h);
  }
  for (int i = 0; i < mq; ++i) {
    HalfSpace h;
    h.normal.assign(n, Rat(0));
    h.normal.insert(h.normal.end(), q.halfspaces[i].normal.begin(),
                    q.halfspaces[i].normal.end());
    h.offset = q.halfspaces[i].offset;
    out.halfspaces[product_relabel(false, i + 1, n, m, nq) - 1] = std::move(h);
  }
  for (const PVertex& vp : p.vertices)
    for (const PVertex& vq : q.vertices) {
      PVertex v;
      for (int f : vp.facets) v.facets.push_back(product_relabel(true, f, n, m, nq));
      for (int f : vq.facets) v.facets.push_back(product_relabel(false, f, n, m, nq));
      std::sort(v.facets.begin(), v.facets.end());
      v.point = vp.point;
      v.point.insert(v.point.end(), vq.point.begin(), vq.point.end());
      out.vertices.push_back(std::move(v));
    }
  std::sort(out.vertices.begin(), out.vertices.end(),
            [](const PVertex& a, const PVertex& b) { return a.facets < b.facets; });
  return out;
}

HPolytope normal_form(const HPolytope& p) {
  const int n = p.dim;
  std::vector<int> initial(n);
  for (int i = 0; i < n; ++i) initial[i] = i + 1;
  const PVertex* v = p.find_vertex(initial);
  if (!v) throw BadParameters("normal_form requires a finely ordered polytope");

  QMatrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = p.halfspaces[i].normal[j];
  const auto binv = inverse(b);
  assert(binv);
  const QMatrix binv_t = binv->transposed();

  HPolytope out;
  out.dim = n;
  for (int i = 0; i < p.num_facets(); ++i) {
    HalfSpace h;
    if (i < n) {
      h.normal.assign(n, Rat(0));
      h.normal[i] = 1;
      h.offset = 0;
    } else {
      h.normal = mul(binv_t, p.halfspaces[i].normal);
      h.offset = p.halfspaces[i].offset;
      for (int j = 0; j < n; ++j)
        h.offset += p.halfspaces[i].normal[j] * v->point[j];
    }
    out.halfspaces.push_back(std::move(h));
  }
  for (const PVertex& w : p.vertices) {
    PVertex nw;
    nw.facets = w.facets;
    QVec diff(n);
    for (int j = 0; j < n; ++j) diff[j] = w.point[j] - v->point[j];
    nw.point = mul(b, diff);
    out.vertices.push_back(std::move(nw));
  }
  return out;
}

int orientation_at_vertex(const HPolytope& p, const std::vector<int>& vertex) {
  const PVertex* w = p.find_vertex(vertex);
  if (!w) throw NotAVertex(facet_list(vertex) + " is not a vertex");
  const int n = p.dim;
  QMatrix e(n, n);
  for (int k = 0; k < n; ++k) {
    /* Edge leaving w along all facets of w except the k-th one. */
    std::vector<int> target = w->facets;
    target.erase(target.begin() + k);
    const PVertex* adj = nullptr;
    for (const PVertex& u : p.vertices) {
      if (u.facets == w->facets) continue;
      if (std::includes(u.facets.begin(), u.facets.end(), target.begin(),
                        target.end())) {
        adj = &u;
        break;
      }
    }
    if (!adj)
      throw Error("no edge leaving " + facet_list(vertex) + " off facet " +
                  std::to_string(w->facets[k]));
    for (int i = 0; i < n; ++i) e(i, k) = adj->point[i] - w->point[i];
  }
  const int s = sign_of(det(e));
  if (s == 0) throw Error("degenerate edge frame at " + facet_list(vertex));
  return s;
}

}  // namespace qtoric
