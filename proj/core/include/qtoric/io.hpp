#pragma once

#include "qtoric/analogous.hpp"
#include "qtoric/moment_angle.hpp"
#include "qtoric/polytope.hpp"
#include "qtoric/quasitoric.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace qtoric {

using Json = nlohmann::json;

/* JSON object forms. Rationals are strings, "p" or "p/q"; facet labels
   stay 1-based; sign-map keys join a vertex's facets with commas.
   Schemas:
     polytope   { "dim": n, "halfspaces": [{"normal": [...], "offset": "p/q"}] }
     comb       { "dim": n, "num_facets": m, "vertices": [[i1,...,in], ...] }
     omniqt     { "polytope": comb, "lambda_star": [[ints]],
                  "signs": {"1,2": 1, ...}, "geometry": polytope? }
     shift      { "h": [...] }
     quadratic  { "m": m, "equations": [{"coeffs": [...], "constant": "p/q"}] } */
Json to_json(const HPolytope& p);
Json to_json(const CombPolytope& p);
Json to_json(const OmniQT& m);
Json to_json(const ShiftVector& h);
Json to_json(const QuadraticSystem& q);
Json to_json(const QMatrix& a);
Json imat_to_json(const IMat& a);
Json qvec_to_json(const QVec& v);

/* Parsers check shapes and field types and throw ParseError; they do
   not judge semantic validity, so tampered descriptors load and can be
   inspected afterwards. Exception: polytope vertices are never stored,
   so parse_polytope re-enumerates them and surfaces the enumeration's
   domain errors. */
HPolytope parse_polytope(const Json& j);
CombPolytope parse_comb(const Json& j);
OmniQT parse_omniqt(const Json& j);
ShiftVector parse_shift(const Json& j);
QuadraticSystem parse_quadratic_system(const Json& j);
IMat imat_from_json(const Json& j);
QVec qvec_from_json(const Json& j);

std::string format_vertex_key(const std::vector<int>& vertex);
std::vector<int> parse_vertex_key(const std::string& key);

/* Canonical byte form: two-space indent, sorted keys, trailing newline. */
std::string dump_deterministic(const Json& j);

std::uint64_t fnv1a64(const std::string& data);
/* 16 hex digits of the FNV-1a hash of the canonical byte form. */
std::string digest_hex(const Json& j);

Json load_json_file(const std::string& path);           // throws ParseError
void save_json_file(const std::string& path, const Json& j);

}  // namespace qtoric
