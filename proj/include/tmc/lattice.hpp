#pragma once

// Smooth complete fans, integral support functions, moment polytopes and
// their face posets.  Inequality orientation: Q = { u : <u, v_rho> <= c_rho },
// H(L, u)|_rho = <u, v_rho> - c_rho, positive value = pole side.

#include "tmc/exact.hpp"

#include <string>
#include <vector>

namespace tmc {

struct Fan {
  int dim = 0;
  std::vector<IntVec> rays;                 // primitive generators
  std::vector<std::vector<int>> max_cones;  // ray indices; smooth: each a Z-basis
};

struct SupportFunction {
  IntVec values;  // c_rho per ray, same order as fan.rays
};

struct FanDiagnostics {
  bool smooth = false;
  bool complete = false;         // wall-pairing surrogate + connected adjacency
  bool strictly_convex = false;  // of the given support function
};

// structural malformation (bad indices, wrong cone size, non-primitive or
// duplicate rays) throws std::invalid_argument; predicate failures do not
FanDiagnostics validate_fan(const Fan& fan, const SupportFunction& psi);

struct Polytope {
  int dim = 0;
  std::vector<IntVec> normals;  // one per fan ray, same order
  IntVec bounds;                // <u, normals[i]> <= bounds[i]
  std::vector<RatVec> vertices;
  std::vector<int> vertex_cone;  // index of a maximal cone whose system cut the vertex
  bool feasible = false;

  IneqSystem inequalities() const;
};

// vertices solved per maximal cone; candidates violating some inequality are
// not vertices and are dropped; duplicates merged
Polytope polytope_from_support(const Fan& fan, const SupportFunction& psi);

struct Face {
  int id = 0;   // position in total order
  int dim = 0;  // affine dimension
  std::vector<int> active;      // inequality indices tight on the whole face
  std::vector<int> vertex_ids;  // indices into Polytope::vertices, sorted
};

struct FacePoset {
  int ambient_dim = 0;
  std::vector<Face> faces;  // sorted by (dim, lex vertex set): the total order
  int top_id = -1;

  // containment via vertex sets
  bool leq(int sub, int sup) const;
  std::vector<int> facets() const;  // ids with dim == top dim - 1
  const Face& top() const { return faces.at(top_id); }
};

// requires a nonempty polytope
FacePoset face_poset(const Polytope& p);

// all lattice points, lexicographically sorted; throws on unbounded input
std::vector<IntVec> lattice_points(const Polytope& p);

struct BoundaryPattern {
  IntVec values;               // H per inequality index
  std::vector<bool> positive;  // H > 0

  bool any_positive() const;
  bool operator==(const BoundaryPattern& o) const { return values == o.values; }
};

// H(L, u) per ray; L and u over the same fan
BoundaryPattern h_function(const Fan& fan, const SupportFunction& L, const IntVec& u);

// face tau lies in the outward boundary del^+ iff some positive facet contains it
bool face_in_plus_boundary(const Face& tau, const std::vector<bool>& positive);

SupportFunction sub_support(const SupportFunction& a, const SupportFunction& b);  // a - b
SupportFunction add_support(const SupportFunction& a, const SupportFunction& b);

}  // namespace tmc
