#include "qtoric/analogous.hpp"
#include "qtoric/cohomology.hpp"
#include "qtoric/errors.hpp"
#include "qtoric/io.hpp"
#include "qtoric/moment_angle.hpp"
#include "qtoric/polytope.hpp"
#include "qtoric/quasitoric.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace qtoric;

/* Every command prints one report object: command, input digests,
   structured results, and a list of named checks. The process exits 0
   only when every check passed. */
struct Reporter {
  Json inputs = Json::object();
  Json results = Json::object();
  Json checks = Json::array();
  bool all_pass = true;

  void check(const std::string& name, bool pass, const std::string& detail) {
    Json c;
    c["name"] = name;
    c["pass"] = pass;
    c["detail"] = detail;
    checks.push_back(std::move(c));
    all_pass = all_pass && pass;
  }

  /* Runs fn and converts a thrown domain error into a failed check. */
  void guarded(const std::string& name,
               const std::function<std::pair<bool, std::string>()>& fn) {
    try {
      auto [pass, detail] = fn();
      check(name, pass, detail);
    } catch (const std::exception& e) {
      check(name, false, e.what());
    }
  }

  int emit(const std::string& command) {
    Json report;
    report["command"] = command;
    report["inputs"] = inputs;
    report["results"] = results;
    report["checks"] = checks;
    std::cout << dump_deterministic(report);
    return all_pass ? 0 : 1;
  }
};

Json load_input(const std::string& path, Reporter& rep) {
  Json j = load_json_file(path);
  rep.inputs[path] = digest_hex(j);
  return j;
}

OmniQT load_omniqt(const std::string& path, Reporter& rep) {
  OmniQT m = parse_omniqt(load_input(path, rep));
  validate_omniqt(m);
  return m;
}

Json summary_json(const OmniQT& m) {
  Json s;
  s["dim"] = m.dim();
  s["num_facets"] = m.num_facets();
  s["num_vertices"] = m.num_vertices();
  s["q_plus"] = m.q_plus();
  s["q_minus"] = m.q_minus();
  s["sign_sum"] = m.sign_sum();
  return s;
}

Json signs_json(const OmniQT& m) {
  Json s = Json::object();
  for (const auto& [vs, sigma] : m.signs) s[format_vertex_key(vs)] = sigma;
  return s;
}

int parse_int_param(const std::string& tok, const std::string& usage) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw ParseError(usage);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError(usage);
  }
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::string partition_key(const std::vector<int>& ks) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ks.size(); ++i) out << (i ? "+" : "") << ks[i];
  return out.str();
}

std::string monomial_string(const RingPresentation& r,
                            const std::vector<int>& exps) {
  std::ostringstream out;
  bool any = false;
  for (std::size_t j = 0; j < exps.size(); ++j) {
    if (exps[j] == 0) continue;
    if (any) out << "*";
    out << "u" << (r.dim + 1 + j);
    if (exps[j] > 1) out << "^" << exps[j];
    any = true;
  }
  return any ? out.str() : "1";
}

std::string linear_relation_string(const RingPresentation& r, int i) {
  std::ostringstream out;
  out << "u" << i;
  for (int j = 0; j < r.reduced_vars(); ++j) {
    const Int c = r.lambda[i - 1][r.dim + j];
    if (c == 0) continue;
    out << (c > 0 ? " + " : " - ");
    const Int a = c > 0 ? c : -c;
    if (a != 1) out << a << "*";
    out << "u" << (r.dim + 1 + j);
  }
  out << " = 0";
  return out.str();
}

std::string monomial_relation_string(const std::vector<int>& non_face) {
  std::ostringstream out;
  for (std::size_t i = 0; i < non_face.size(); ++i)
    out << (i ? "*" : "") << "u" << non_face[i];
  return out.str();
}

/* Fine ordering and normal form for a polytope that arrives without
   them; the lexicographically first vertex becomes initial. */
HPolytope normalized_input(HPolytope p, bool* changed) {
  *changed = false;
  if (!p.is_finely_ordered()) {
    p = fine_order(p, p.vertices.front().facets);
    *changed = true;
  }
  if (!p.is_normal_form()) {
    p = normal_form(p);
    *changed = true;
  }
  return p;
}

bool c_annihilates(const CMatrix& c, const HPolytope& p) {
  const QMatrix prod = mul(c.entries, p.a_matrix());
  for (int i = 0; i < prod.rows(); ++i)
    for (int j = 0; j < prod.cols(); ++j)
      if (prod(i, j) != 0) return false;
  return true;
}

void add_dichar_check(Reporter& rep, const OmniQT& m) {
  const DicharReport d = validate_dichar(m.polytope, m.lambda);
  std::string detail = "every vertex block has determinant +-1";
  if (!d.ok) {
    std::ostringstream msg;
    msg << d.violations.size() << " vertex blocks fail; first at {";
    for (std::size_t i = 0; i < d.violations[0].vertex.size(); ++i)
      msg << (i ? "," : "") << d.violations[0].vertex[i];
    msg << "} with determinant " << d.violations[0].det;
    detail = msg.str();
  }
  rep.check("dichar_valid", d.ok, detail);
}

constexpr const char* kBuildUsage =
    "usage: build {cp N | cp-eps N e1..eN | cube N | bott N d1..dK | "
    "bflag N | s2n N | brs R S | simplex-polytope N | cube-polytope N | "
    "product A.json B.json}";

HPolytope build_simplex(int n) {
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

HPolytope build_cube(int n) {
  HPolytope c;
  {
    HalfSpace lo{{Rat(1)}, Rat(0)};
    HalfSpace hi{{Rat(-1)}, Rat(1)};
    c = vertices_from_halfspaces({lo, hi});
  }
  HPolytope out = c;
  for (int i = 1; i < n; ++i) out = product(out, c);
  return out;
}

int cmd_build(const std::string& name, const std::vector<std::string>& params,
              const std::string& out_path) {
  Reporter rep;
  auto want = [&](std::size_t k) {
    if (params.size() != k) throw ParseError(kBuildUsage);
  };
  auto int_at = [&](std::size_t i) { return parse_int_param(params[i], kBuildUsage); };

  std::optional<OmniQT> m;
  std::optional<HPolytope> poly;
  if (name == "cp") {
    want(1);
    m = cp(int_at(0));
  } else if (name == "cp-eps") {
    if (params.empty()) throw ParseError(kBuildUsage);
    const int n = int_at(0);
    want(1 + static_cast<std::size_t>(n > 0 ? n : 0));
    std::vector<int> eps;
    for (int i = 0; i < n; ++i) eps.push_back(int_at(1 + i));
    m = cp_eps(n, eps);
  } else if (name == "cube") {
    want(1);
    const int n = int_at(0);
    m = bott_tower(n, std::vector<Int>(n > 0 ? n * (n - 1) / 2 : 0, 0));
  } else if (name == "bott") {
    if (params.empty()) throw ParseError(kBuildUsage);
    const int n = int_at(0);
    const int k = n > 0 ? n * (n - 1) / 2 : 0;
    want(1 + static_cast<std::size_t>(k));
    std::vector<Int> d;
    for (int i = 0; i < k; ++i) d.push_back(int_at(1 + i));
    m = bott_tower(n, d);
  } else if (name == "bflag") {
    want(1);
    m = bounded_flag(int_at(0));
  } else if (name == "s2n") {
    want(1);
    m = s_product(int_at(0));
  } else if (name == "brs") {
    want(2);
    m = b_rs(int_at(0), int_at(1));
  } else if (name == "simplex-polytope") {
    want(1);
    poly = build_simplex(int_at(0));
  } else if (name == "cube-polytope") {
    want(1);
    poly = build_cube(int_at(0));
  } else if (name == "product") {
    want(2);
    const HPolytope a = parse_polytope(load_input(params[0], rep));
    const HPolytope b = parse_polytope(load_input(params[1], rep));
    poly = product(a, b);
  } else {
    throw ParseError(kBuildUsage);
  }

  Json object;
  if (m) {
    rep.results = summary_json(*m);
    rep.results["lambda_star"] = imat_to_json(m->lambda_star());
    add_dichar_check(rep, *m);
    object = to_json(*m);
  } else {
    rep.results["dim"] = poly->dim;
    rep.results["num_facets"] = poly->num_facets();
    rep.results["num_vertices"] = poly->num_vertices();
    rep.check("bounded_simple", true, "vertex enumeration succeeded");
    object = to_json(*poly);
  }
  rep.results["digest"] = digest_hex(object);
  if (!out_path.empty()) {
    save_json_file(out_path, object);
    rep.results["written"] = out_path;
  }
  return rep.emit("build");
}

enum class SumKind { Connected, Box, Add };

int cmd_sum(SumKind kind, const std::string& file_a, const std::string& file_b,
            const std::string& out_path) {
  Reporter rep;
  const OmniQT a = load_omniqt(file_a, rep);
  const OmniQT b = load_omniqt(file_b, rep);
  const char* cmd = kind == SumKind::Connected ? "sum"
                    : kind == SumKind::Box     ? "boxsum"
                                               : "add";
  OmniQT out = kind == SumKind::Connected ? connected_sum(a, b)
               : kind == SumKind::Box     ? box_sum(a, b)
                                          : add_cobordism(a, b);

  rep.results = summary_json(out);
  rep.results["lambda_star"] = imat_to_json(out.lambda_star());
  add_dichar_check(rep, out);
  if (kind == SumKind::Connected) {
    rep.check("vertex_count_identity",
              out.num_vertices() == a.num_vertices() + b.num_vertices() - 2,
              "q = q1 + q2 - 2");
    rep.check("facet_count_identity",
              out.num_facets() == a.num_facets() + b.num_facets() - a.dim(),
              "m = m1 + m2 - n");
  } else {
    rep.check("facet_count_identity",
              out.num_facets() == a.num_facets() + b.num_facets(),
              "m = m1 + m2 (intermediate cube contributes n)");
  }
  rep.check("sign_sum_additive",
            out.sign_sum() == a.sign_sum() + b.sign_sum(),
            "sum of vertex signs adds across the gluing");

  if (kind == SumKind::Add) {
    try {
      const RingPresentation ra = ring_presentation(a);
      const RingPresentation rb = ring_presentation(b);
      const RingPresentation ro = ring_presentation(out);
      Json numbers = Json::object();
      bool additive = true;
      std::ostringstream detail;
      for (const auto& part : partitions_of(out.dim())) {
        const Rat na = chern_number(ra, part);
        const Rat nb = chern_number(rb, part);
        const Rat no = chern_number(ro, part);
        numbers[partition_key(part)] = format_rat(no);
        if (no != na + nb) {
          additive = false;
          detail << partition_key(part) << ": " << format_rat(no)
                 << " != " << format_rat(na) << " + " << format_rat(nb) << "; ";
        }
      }
      rep.results["chern_numbers"] = std::move(numbers);
      rep.check("chern_numbers_additive", additive,
                additive ? "every partition adds" : detail.str());
    } catch (const ScaleLimit& e) {
      rep.check("chern_numbers_additive", true,
                std::string("skipped: ") + e.what());
    }
  }

  Json object = to_json(out);
  rep.results["digest"] = digest_hex(object);
  if (!out_path.empty()) {
    save_json_file(out_path, object);
    rep.results["written"] = out_path;
  }
  return rep.emit(cmd);
}

int cmd_signs(const std::string& file) {
  Reporter rep;
  const OmniQT m = load_omniqt(file, rep);
  rep.results = summary_json(m);
  rep.results["signs"] = signs_json(m);
  rep.results["lambda_star"] = imat_to_json(m.lambda_star());
  add_dichar_check(rep, m);
  rep.guarded("kernel_lattice", [&]() -> std::pair<bool, std::string> {
    const KernelLattice k = kernel_lattice(m.lambda);
    rep.results["kernel_basis"] = imat_to_json(k.basis);
    return {true, "annihilating, saturated, hermite-reduced"};
  });
  return rep.emit("signs");
}

int cmd_chern(const std::string& file) {
  Reporter rep;
  const OmniQT m = load_omniqt(file, rep);
  const RingPresentation r = ring_presentation(m);
  rep.results["dim"] = m.dim();
  rep.results["sign_sum"] = m.sign_sum();

  Json numbers = Json::object();
  for (const auto& part : partitions_of(m.dim()))
    numbers[partition_key(part)] = format_rat(chern_number(r, part));
  rep.results["chern_numbers"] = std::move(numbers);

  std::vector<int> ref;
  const Rat top = evaluate(r, chern_class(r, m.dim()), &ref);
  rep.results["reference_vertex"] = ref;
  rep.check("top_chern_equals_sign_sum", top == m.sign_sum(),
            "evaluation of c_n against the fundamental class vs sum of signs");

  if (m.dim() == 2) {
    const Rat td = todd_genus_dim2(r);
    rep.results["todd"] = format_rat(td);
    rep.results["toric_obstruction"] = toric_obstruction(r);
  }
  return rep.emit("chern");
}

int cmd_ring(const std::string& file, int degree) {
  Reporter rep;
  const OmniQT m = load_omniqt(file, rep);
  const RingPresentation r = ring_presentation(m);

  Json linear = Json::array();
  for (int i = 1; i <= r.dim; ++i) linear.push_back(linear_relation_string(r, i));
  rep.results["linear_relations"] = std::move(linear);
  Json monomial = Json::array();
  for (const auto& nf : r.non_faces) monomial.push_back(monomial_relation_string(nf));
  rep.results["monomial_relations"] = std::move(monomial);

  std::vector<int> degrees;
  if (degree >= 0)
    degrees.push_back(degree);
  else
    for (int d = 0; d <= r.dim; ++d) degrees.push_back(d);

  Json basis = Json::object();
  Json dims = Json::object();
  for (int d : degrees) {
    const GradedPiece piece(r, d);
    Json mono = Json::array();
    for (const auto& e : piece.quotient_basis())
      mono.push_back(monomial_string(r, e));
    basis[std::to_string(d)] = std::move(mono);
    dims[std::to_string(d)] = piece.quotient_dim();
  }
  rep.results["basis"] = std::move(basis);
  rep.results["rank"] = std::move(dims);
  if (degree < 0) {
    Json betti = Json::array();
    for (int b : betti_numbers(r)) betti.push_back(b);
    rep.results["betti"] = std::move(betti);
  }
  rep.check("top_degree_rank_one", GradedPiece(r, r.dim).quotient_dim() == 1,
            "the top graded piece must have rank one");
  return rep.emit("ring");
}

int cmd_quadrics(const std::string& polytope_path, int samples, long long seed,
                 const std::string& export_path) {
  Reporter rep;
  HPolytope p = parse_polytope(load_input(polytope_path, rep));
  bool normalized = false;
  p = normalized_input(std::move(p), &normalized);
  rep.results["normalized"] = normalized;

  const QuadraticSystem sys = quadratic_system(p);
  rep.results["system"] = to_json(sys);
  rep.results["manifold_dimension"] = dimension_check(sys);
  rep.results["samples"] = samples;
  rep.results["seed"] = seed;

  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  double worst = 0.0;
  std::size_t min_rank = sys.equations.size();
  bool residual_ok = true, rank_ok = true;
  std::string rank_detail = "rank m-n at every sample";
  for (int i = 0; i < samples; ++i) {
    const QVec x = sample_interior_point(p, rng);
    std::vector<double> angles(p.num_facets());
    for (double& t : angles)
      t = 2.0 * M_PI * (static_cast<double>(rng()) /
                        static_cast<double>(std::mt19937::max()));
    const auto z = sample_point(p, x, angles);
    const double resid = max_residual(sys, z);
    worst = std::max(worst, resid);
    if (resid >= kResidualTol) residual_ok = false;
    try {
      const JacobianReport jr = jacobian_rank(sys, z);
      min_rank = std::min(min_rank, jr.rank);
      if (jr.rank != jr.expected) rank_ok = false;
    } catch (const NotOnVariety& e) {
      rank_ok = false;
      rank_detail = e.what();
    }
  }
  rep.results["max_residual"] = worst;
  rep.results["min_jacobian_rank"] = static_cast<int>(samples > 0 ? min_rank : 0);
  if (samples > 0) {
    std::ostringstream od;
    od << "max relative residual " << worst << " over " << samples << " samples";
    rep.check("residuals_within_tolerance", residual_ok, od.str());
    rep.check("jacobian_rank_full", rank_ok, rank_detail);
  }
  if (!export_path.empty()) {
    save_json_file(export_path, to_json(sys));
    rep.results["written"] = export_path;
  }
  return rep.emit("quadrics");
}

int cmd_analogous(const std::string& polytope_path,
                  const std::string& shift_path,
                  const std::string& export_path) {
  Reporter rep;
  HPolytope p = parse_polytope(load_input(polytope_path, rep));
  bool normalized = false;
  p = normalized_input(std::move(p), &normalized);
  rep.results["normalized"] = normalized;

  const CMatrix c = c_matrix(p);
  rep.results["c_matrix"] = to_json(c.entries);
  rep.check("c_matrix_annihilates_normals", c_annihilates(c, p),
            "C * A = 0 exactly");
  rep.check("c_matrix_rank",
            rank(c.entries) == static_cast<int>(c.num_rows()),
            "rank m - n");
  const FaceRankReport fr = face_rank_check(c, p.comb());
  rep.results["faces_checked"] = true;
  rep.check("face_rank", fr.ok,
            fr.ok ? "deleting any face's columns keeps rank m - n"
                  : std::to_string(fr.violations.size()) + " faces drop rank");

  if (!shift_path.empty()) {
    const ShiftVector h = parse_shift(load_input(shift_path, rep));
    if (static_cast<int>(h.h.size()) != p.num_facets())
      throw ParseError("shift vector length must equal the facet count");
    const ShiftClass cls = classify_shift(p, h);
    rep.results["classification"] = to_string(cls);
    const QVec d = support_distances(p, h);
    rep.results["support_distances"] = qvec_to_json(d);
    bool zeros = true;
    for (int i = 0; i < p.dim; ++i) zeros = zeros && d[i] == 0;
    rep.check("support_distances_vanish_first_n", zeros,
              "d_i(h) = 0 for i <= n");
  }
  if (!export_path.empty()) {
    save_json_file(export_path, to_json(c.entries));
    rep.results["written"] = export_path;
  }
  return rep.emit("analogous");
}

int cmd_verify(const std::string& file, int samples, long long seed) {
  Reporter rep;
  const OmniQT m = parse_omniqt(load_input(file, rep));
  rep.results = summary_json(m);

  rep.guarded("comb_valid", [&]() -> std::pair<bool, std::string> {
    validate_comb(m.polytope);
    return {true, "simple-polytope vertex structure"};
  });
  rep.check("refined_form", is_refined(m.lambda, m.dim()),
            "identity block in the first n columns");
  add_dichar_check(rep, m);
  rep.guarded("signs_complete", [&]() -> std::pair<bool, std::string> {
    for (const auto& vs : m.polytope.vertex_sets) {
      auto it = m.signs.find(vs);
      if (it == m.signs.end()) return {false, "missing sign at a vertex"};
      if (it->second != 1 && it->second != -1)
        return {false, "sign not +-1 at a vertex"};
    }
    if (m.signs.size() != m.polytope.vertex_sets.size())
      return {false, "signs listed for non-vertices"};
    return {true, "every vertex carries +-1"};
  });
  rep.guarded("count_identities", [&]() -> std::pair<bool, std::string> {
    if (m.num_facets() < m.dim() + 1 || m.num_vertices() < m.dim() + 1)
      return {false, "fewer facets or vertices than any simple polytope allows"};
    if (m.dim() == 2 && m.num_vertices() != m.num_facets())
      return {false, "a polygon needs q = m"};
    return {true, "facet and vertex counts plausible"};
  });
  rep.guarded("sign_chern_cross_check", [&]() -> std::pair<bool, std::string> {
    try {
      const RingPresentation r = ring_presentation(m);
      const Rat top = evaluate(r, chern_class(r, m.dim()));
      if (top != m.sign_sum())
        return {false, "evaluate(c_n) = " + format_rat(top) + " but sum of signs = " +
                           std::to_string(m.sign_sum())};
      return {true, "evaluate(c_n) equals the sum of signs"};
    } catch (const ScaleLimit& e) {
      return {true, std::string("skipped: ") + e.what()};
    }
  });
  rep.guarded("kernel_saturated", [&]() -> std::pair<bool, std::string> {
    kernel_lattice(m.lambda);
    return {true, "kernel basis annihilates and saturates"};
  });

  if (m.geometry) {
    const HPolytope& g = *m.geometry;
    rep.check("geometry_matches_comb", g.comb() == m.polytope,
              "facet/vertex incidences agree with the stored geometry");
    rep.check("geometry_normal_form", g.is_normal_form(),
              "initial vertex at the origin, first n normals standard");
    rep.guarded("geometric_signs_match", [&]() -> std::pair<bool, std::string> {
      const int orient = m.orientation ? *m.orientation : 1;
      if (signs_geometric(m, orient) != m.signs)
        return {false, "stored signs disagree with the geometric sign rule"};
      return {true, "geometric sign rule reproduces the stored signs"};
    });
    rep.guarded("c_matrix_annihilates_normals",
                [&]() -> std::pair<bool, std::string> {
                  const CMatrix c = c_matrix(g);
                  if (!c_annihilates(c, g)) return {false, "C * A != 0"};
                  if (rank(c.entries) != static_cast<int>(c.num_rows()))
                    return {false, "rank C < m - n"};
                  return {true, "C * A = 0 and rank C = m - n"};
                });
    rep.guarded("face_rank", [&]() -> std::pair<bool, std::string> {
      const FaceRankReport fr = face_rank_check(c_matrix(g), m.polytope);
      if (!fr.ok)
        return {false, std::to_string(fr.violations.size()) + " faces drop rank"};
      return {true, "full rank after deleting any face's columns"};
    });
    rep.guarded("quadric_samples", [&]() -> std::pair<bool, std::string> {
      const QuadraticSystem sys = quadratic_system(g);
      std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
      double worst = 0.0;
      for (int i = 0; i < samples; ++i) {
        const QVec x = sample_interior_point(g, rng);
        std::vector<double> angles(g.num_facets());
        for (double& t : angles)
          t = 2.0 * M_PI * (static_cast<double>(rng()) /
                            static_cast<double>(std::mt19937::max()));
        const auto z = sample_point(g, x, angles);
        worst = std::max(worst, max_residual(sys, z));
        const JacobianReport jr = jacobian_rank(sys, z);
        if (jr.rank != jr.expected)
          return {false, "jacobian rank dropped at a sample"};
      }
      if (worst >= kResidualTol) return {false, "residual above tolerance"};
      std::ostringstream od;
      od << "max residual " << worst << " over " << samples << " samples";
      return {true, od.str()};
    });
  }
  return rep.emit("verify");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculus of omnioriented quasitoric manifolds"};
  app.require_subcommand(1);

  std::string build_name, out_path, export_path, file_a, file_b;
  std::string polytope_path, shift_path;
  std::vector<std::string> build_params;
  long long seed = 0;
  int samples = 100;
  int verify_samples = 10;
  int degree = -1;

  CLI::App* c_build = app.add_subcommand("build", "construct a named example");
  c_build->add_option("name", build_name, "builder name")->required();
  c_build->add_option("params", build_params, "builder parameters");
  c_build->add_option("--out", out_path, "write the descriptor here");

  CLI::App* c_sum = app.add_subcommand("sum", "connected sum of two descriptors");
  c_sum->add_option("a", file_a)->required();
  c_sum->add_option("b", file_b)->required();
  c_sum->add_option("--out", out_path);

  CLI::App* c_box = app.add_subcommand("boxsum", "sum through an intermediate cube");
  c_box->add_option("a", file_a)->required();
  c_box->add_option("b", file_b)->required();
  c_box->add_option("--out", out_path);

  CLI::App* c_add = app.add_subcommand(
      "add", "cobordism-class addition with additivity checks");
  c_add->add_option("a", file_a)->required();
  c_add->add_option("b", file_b)->required();
  c_add->add_option("--out", out_path);

  CLI::App* c_signs = app.add_subcommand("signs", "vertex signs and kernel lattice");
  c_signs->add_option("file", file_a)->required();

  CLI::App* c_chern = app.add_subcommand("chern", "characteristic numbers");
  c_chern->add_option("file", file_a)->required();

  CLI::App* c_ring = app.add_subcommand("ring", "cohomology basis and relations");
  c_ring->add_option("file", file_a)->required();
  c_ring->add_option("--degree", degree, "restrict to one degree")
      ->check(CLI::NonNegativeNumber);

  CLI::App* c_quad = app.add_subcommand("quadrics", "quadratic presentation");
  c_quad->add_option("--polytope", polytope_path)->required();
  c_quad->add_option("--samples", samples, "sample count (default 100)");
  c_quad->add_option("--seed", seed, "sampling seed (default 0)");
  c_quad->add_option("--export", export_path, "write the system here");

  CLI::App* c_ana = app.add_subcommand("analogous", "shift-space analysis");
  c_ana->add_option("--polytope", polytope_path)->required();
  c_ana->add_option("--shift", shift_path, "shift vector file");
  c_ana->add_option("--export", export_path, "write the C matrix here");

  CLI::App* c_ver = app.add_subcommand("verify", "run the full check battery");
  c_ver->add_option("file", file_a)->required();
  c_ver->add_option("--samples", verify_samples, "quadric samples (default 10)");
  c_ver->add_option("--seed", seed, "sampling seed (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_build->parsed()) return cmd_build(build_name, build_params, out_path);
    if (c_sum->parsed()) return cmd_sum(SumKind::Connected, file_a, file_b, out_path);
    if (c_box->parsed()) return cmd_sum(SumKind::Box, file_a, file_b, out_path);
    if (c_add->parsed()) return cmd_sum(SumKind::Add, file_a, file_b, out_path);
    if (c_signs->parsed()) return cmd_signs(file_a);
    if (c_chern->parsed()) return cmd_chern(file_a);
    if (c_ring->parsed()) return cmd_ring(file_a, degree);
    if (c_quad->parsed()) return cmd_quadrics(polytope_path, samples, seed, export_path);
    if (c_ana->parsed()) return cmd_analogous(polytope_path, shift_path, export_path);
    if (c_ver->parsed()) return cmd_verify(file_a, verify_samples, seed);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
