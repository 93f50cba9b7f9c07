#pragma once

#include "qtoric/linalg.hpp"
#include "qtoric/rational.hpp"

#include <vector>

namespace qtoric {

/* One inequality <normal, x> + offset >= 0. */
struct HalfSpace {
  QVec normal;
  Rat offset;

  bool operator==(const HalfSpace& o) const {
    return normal == o.normal && offset == o.offset;
  }
};

/* Facet indices are 1-based throughout the public interface. */
struct PVertex {
  std::vector<int> facets;  // sorted, exactly dim entries
  QVec point;

  bool operator==(const PVertex& o) const {
    return facets == o.facets && point == o.point;
  }
};

/* Combinatorial type only: which facet sets are vertices. */
struct CombPolytope {
  int dim = 0;
  int num_facets = 0;
  std::vector<std::vector<int>> vertex_sets;  // lexicographically sorted

  bool operator==(const CombPolytope& o) const {
    return dim == o.dim && num_facets == o.num_facets &&
           vertex_sets == o.vertex_sets;
  }
};

/* Bounded simple polytope with an ordered irredundant facet list and
   the full vertex enumeration. Construct via vertices_from_halfspaces. */
struct HPolytope {
  int dim = 0;
  std::vector<HalfSpace> halfspaces;
  std::vector<PVertex> vertices;  // sorted by facet set

  int num_facets() const { return static_cast<int>(halfspaces.size()); }
  int num_vertices() const { return static_cast<int>(vertices.size()); }
  CombPolytope comb() const;
  const PVertex* find_vertex(const std::vector<int>& facets) const;
  bool is_finely_ordered() const;
  bool is_normal_form() const;
  /* A matrix (m x n) and b vector of the system A x + b >= 0. */
  QMatrix a_matrix() const;
  QVec b_vector() const;

  bool operator==(const HPolytope& o) const {
    return dim == o.dim && halfspaces == o.halfspaces && vertices == o.vertices;
  }
};

/* Checks structural invariants; throws on violation. */
void validate_comb(const CombPolytope& p);

/* Enumerates vertices of the intersection of the given half-spaces.
   Throws BadParameters, Unbounded, Empty, NotSimple, Redundant. */
HPolytope vertices_from_halfspaces(std::vector<HalfSpace> halfspaces);

/* True iff {y : A y >= 0} = {0}, decided by exact Fourier-Motzkin. */
bool recession_cone_trivial(const QMatrix& a);

/* Faces grouped by codimension 0..n; each face is the sorted list of
   facets containing it. Codimension n entries are the vertices. */
std::vector<std::vector<std::vector<int>>> face_poset(const CombPolytope& p);

/* Relabeling that moves the facets of `vertex` to positions 1..n,
   keeping relative order on both blocks; perm[old-1] = new. */
std::vector<int> fine_order_permutation(int num_facets,
                                        const std::vector<int>& vertex);

CombPolytope apply_facet_permutation(const CombPolytope& p,
                                     const std::vector<int>& perm);
HPolytope apply_facet_permutation(const HPolytope& p,
                                  const std::vector<int>& perm);

CombPolytope fine_order(const CombPolytope& p, const std::vector<int>& vertex);
HPolytope fine_order(const HPolytope& p, const std::vector<int>& vertex);

/* Facet order: first-n of P, first-n' of Q, rest of P, rest of Q. */
CombPolytope product(const CombPolytope& p, const CombPolytope& q);
HPolytope product(const HPolytope& p, const HPolytope& q);

/* Affine change sending the initial vertex to 0 and the first n
   normals to the standard basis. Requires a finely ordered polytope. */
HPolytope normal_form(const HPolytope& p);

/* Sign of det of outgoing edge directions at a vertex; column k is the
   edge not lying on the k-th facet of the vertex (facets sorted). */
int orientation_at_vertex(const HPolytope& p, const std::vector<int>& vertex);

}  // namespace qtoric
