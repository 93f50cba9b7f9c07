#include "qtoric/io.hpp"

#include "qtoric/errors.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace qtoric {

namespace {

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int need_int(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string(key) + " must be an integer");
  return v.get<int>();
}

Rat rat_from_json(const Json& v) {
  if (v.is_number_integer()) return Rat(v.get<long long>());
  if (v.is_string()) return parse_rat(v.get<std::string>());
  throw ParseError("rational values must be strings or integers");
}

std::vector<int> ints_from_json(const Json& v) {
  if (!v.is_array()) throw ParseError("expected an array of integers");
  std::vector<int> out;
  for (const Json& e : v) {
    if (!e.is_number_integer()) throw ParseError("expected an integer entry");
    out.push_back(e.get<int>());
  }
  return out;
}

}  // namespace

Json qvec_to_json(const QVec& v) {
  Json out = Json::array();
  for (const Rat& x : v) out.push_back(format_rat(x));
  return out;
}

QVec qvec_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  QVec out;
  for (const Json& e : j) out.push_back(rat_from_json(e));
  return out;
}

Json to_json(const QMatrix& a) {
  Json rows = Json::array();
  for (int i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < a.cols(); ++j) row.push_back(format_rat(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json imat_to_json(const IMat& a) {
  Json rows = Json::array();
  for (const IVec& r : a) {
    Json row = Json::array();
    for (Int x : r) row.push_back(x);
    rows.push_back(std::move(row));
  }
  return rows;
}

IMat imat_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integer rows");
  IMat out;
  for (const Json& r : j) {
    if (!r.is_array()) throw ParseError("matrix rows must be arrays");
    IVec row;
    for (const Json& e : r) {
      if (!e.is_number_integer()) throw ParseError("matrix entries must be integers");
      row.push_back(e.get<Int>());
    }
    if (!out.empty() && row.size() != out.front().size())
      throw ParseError("matrix rows must have equal length");
    out.push_back(std::move(row));
  }
  return out;
}

std::string format_vertex_key(const std::vector<int>& vertex) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vertex.size(); ++i)
    out << (i ? "," : "") << vertex[i];
  return out.str();
}

std::vector<int> parse_vertex_key(const std::string& key) {
  std::vector<int> out;
  std::istringstream in(key);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) throw ParseError("bad vertex key '" + key + "'");
      out.push_back(v);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad vertex key '" + key + "'");
    }
  }
  if (out.empty()) throw ParseError("empty vertex key");
  return out;
}

Json to_json(const HPolytope& p) {
  Json j;
  j["dim"] = p.dim;
  Json hs = Json::array();
  for (const HalfSpace& h : p.halfspaces) {
    Json e;
    e["normal"] = qvec_to_json(h.normal);
    e["offset"] = format_rat(h.offset);
    hs.push_back(std::move(e));
  }
  j["halfspaces"] = std::move(hs);
  return j;
}

HPolytope parse_polytope(const Json& j) {
  const int dim = need_int(j, "dim");
  const Json& hs = need(j, "halfspaces");
  if (!hs.is_array()) throw ParseError("halfspaces must be an array");
  std::vector<HalfSpace> spaces;
  for (const Json& e : hs) {
    HalfSpace h;
    h.normal = qvec_from_json(need(e, "normal"));
    if (static_cast<int>(h.normal.size()) != dim)
      throw ParseError("normal length disagrees with dim");
    h.offset = rat_from_json(need(e, "offset"));
    spaces.push_back(std::move(h));
  }
  /* Vertices are never stored; enumeration reconstructs them. */
  return vertices_from_halfspaces(std::move(spaces));
}

Json to_json(const CombPolytope& p) {
  Json j;
  j["dim"] = p.dim;
  j["num_facets"] = p.num_facets;
  j["vertices"] = p.vertex_sets;
  return j;
}

CombPolytope parse_comb(const Json& j) {
  CombPolytope p;
  p.dim = need_int(j, "dim");
  p.num_facets = need_int(j, "num_facets");
  const Json& vs = need(j, "vertices");
  if (!vs.is_array()) throw ParseError("vertices must be an array");
  for (const Json& e : vs) p.vertex_sets.push_back(ints_from_json(e));
  return p;
}

Json to_json(const OmniQT& m) {
  Json j;
  j["polytope"] = to_json(m.polytope);
  j["lambda_star"] = imat_to_json(m.lambda_star());
  Json signs = Json::object();
  for (const auto& [vs, sigma] : m.signs) signs[format_vertex_key(vs)] = sigma;
  j["signs"] = std::move(signs);
  if (m.geometry) j["geometry"] = to_json(*m.geometry);
  return j;
}

OmniQT parse_omniqt(const Json& j) {
  OmniQT m;
  m.polytope = parse_comb(need(j, "polytope"));
  const IMat star = imat_from_json(need(j, "lambda_star"));
  if (static_cast<int>(star.size()) != m.polytope.dim)
    throw ParseError("lambda_star must have one row per dimension");
  const int n = m.polytope.dim;
  const int mf = m.polytope.num_facets;
  m.lambda.assign(n, IVec(mf, 0));
  for (int i = 0; i < n; ++i) {
    m.lambda[i][i] = 1;
    if (static_cast<int>(star[i].size()) != mf - n)
      throw ParseError("lambda_star rows must have num_facets - dim entries");
    for (int jj = n; jj < mf; ++jj) m.lambda[i][jj] = star[i][jj - n];
  }
  const Json& signs = need(j, "signs");
  if (!signs.is_object()) throw ParseError("signs must be an object");
  for (const auto& [key, val] : signs.items()) {
    if (!val.is_number_integer()) throw ParseError("signs must be integers");
    m.signs[parse_vertex_key(key)] = val.get<int>();
  }
  if (j.contains("geometry")) m.geometry = parse_polytope(j.at("geometry"));
  /* The orientation is not stored: with geometry in normal form the
     geometric sign rule forces it to equal the initial vertex's sign. */
  if (m.geometry) {
    auto it = m.signs.find(m.initial_vertex());
    if (it != m.signs.end()) m.orientation = it->second;
  }
  return m;
}

Json to_json(const ShiftVector& h) {
  Json j;
  j["h"] = qvec_to_json(h.h);
  return j;
}

ShiftVector parse_shift(const Json& j) {
  return ShiftVector{qvec_from_json(need(j, "h"))};
}

Json to_json(const QuadraticSystem& q) {
  Json j;
  j["m"] = q.num_complex_vars;
  Json eqs = Json::array();
  for (const QuadraticEquation& e : q.equations) {
    Json je;
    je["coeffs"] = qvec_to_json(e.coeffs);
    je["constant"] = format_rat(e.constant);
    eqs.push_back(std::move(je));
  }
  j["equations"] = std::move(eqs);
  return j;
}

QuadraticSystem parse_quadratic_system(const Json& j) {
  QuadraticSystem q;
  q.num_complex_vars = need_int(j, "m");
  const Json& eqs = need(j, "equations");
  if (!eqs.is_array()) throw ParseError("equations must be an array");
  for (const Json& e : eqs) {
    QuadraticEquation eq;
    eq.coeffs = qvec_from_json(need(e, "coeffs"));
    eq.constant = rat_from_json(need(e, "constant"));
    q.equations.push_back(std::move(eq));
  }
  return q;
}

std::string dump_deterministic(const Json& j) {
  return j.dump(2) + "\n";
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest_hex(const Json& j) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(dump_deterministic(j));
  return out.str();
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid json in '") + path + "': " + e.what());
  }
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << dump_deterministic(j);
}

}  // namespace qtoric
