#pragma once

// Mirror-side machinery: ordered simplicial complexes (barycentric subdivisions
// of face posets, standard simplices), relative simplicial cochains with cup
// product, and the dual-cell intersection model on two parallel copies.

#include "tmc/chains.hpp"
#include "tmc/exact.hpp"
#include "tmc/lattice.hpp"

#include <map>
#include <vector>

namespace tmc {

// cochains and cellular chains are finitely supported integer combinations of
// simplices, keyed by strictly increasing vertex lists
using Cochain = std::map<std::vector<int>, Int>;

struct OrderedComplex {
  int n_vertices = 0;
  // simplices per dimension, each a strictly increasing vertex list, lex sorted
  std::vector<std::vector<std::vector<int>>> simplices;

  int top_dim() const { return (int)simplices.size() - 1; }
  bool has_simplex(const std::vector<int>& s) const;
  int index_of(int dim, const std::vector<int>& s) const;  // -1 if absent
};

// vertices = faces of the poset in total order, simplices = strictly nested chains
OrderedComplex barycentric(const FacePoset& fp);

// the full simplex on vertices 0..d
OrderedComplex full_simplex(int d);

// full subcomplex spanned by the boundary-touching faces; the top face of Q is
// never a member (its active set is empty)
struct PlusSubcomplex {
  std::vector<bool> vertex_member;  // per face id of the poset

  bool simplex_member(const std::vector<int>& s) const;
};

PlusSubcomplex plus_subcomplex(const FacePoset& fp, const BoundaryPattern& pattern);

// arbitrary full subcomplex by vertex set (shared helper for local models)
PlusSubcomplex full_subcomplex(int n_vertices, const std::vector<int>& members);

// relative cochain complex C^*(oc, A): basis = simplices not in A, coboundary
// dual to the alternating-sign face boundary
FreeComplex relative_cochain_complex(const OrderedComplex& oc, const PlusSubcomplex& a);

// list of alive simplices per degree, in the order used by the complex basis
std::vector<std::vector<std::vector<int>>> alive_simplices(const OrderedComplex& oc,
                                                           const PlusSubcomplex& a);

// (phi cup psi)[v_0..v_k] = sum_i phi([v_0..v_i]) * psi([v_i..v_k]);
// evaluated on all simplices of oc, restricted to those not in `target_killed`
Cochain simp_cup(const OrderedComplex& oc, const Cochain& phi, const Cochain& psi,
                 const PlusSubcomplex& target_killed);

// cochain coefficient vector in the basis of a relative complex at one degree
IntVec cochain_to_vector(const Cochain& c, const std::vector<std::vector<int>>& basis);
Cochain vector_to_cochain(const IntVec& v, const std::vector<std::vector<int>>& basis);

// ---- dual-cell local model on two parallel copies --------------------------

enum class PiTag { empty, same_dimension, collapsed };

struct PiResult {
  PiTag tag = PiTag::empty;
  std::vector<int> target;  // cell on the shifted copy receiving the intersection
};

// sigma on the unshifted copy, tau on the shifted copy; both faces of `oc`
// (for the standard local model pass full_simplex(d))
PiResult pi_intersect_collapse(const OrderedComplex& oc, const std::vector<int>& sigma,
                               const std::vector<int>& tau);

// chain-level product: only same-dimension intersections contribute (the
// collapse drops the dimension of collapsed cells, killing them in the graded
// product where codimensions add); result lives on the shifted copy
Cochain cell_intersection_product(const OrderedComplex& oc, const Cochain& a, const Cochain& b);

// relabeling of a cellular chain as a simplicial cochain; with the cellular
// orientation convention fixed here the map is sign-free
Cochain cell_to_simp(const Cochain& cellular);

// independent construction of the cellular complex C_{n-*}(dual model):
// boundary of a dual cell enumerates cofaces with insertion signs; must equal
// the relative cochain complex matrices (tested, not assumed)
FreeComplex cell_complex(const OrderedComplex& oc, const PlusSubcomplex& a);

// exact polyhedral realization of the two dual cells in the standard model on
// Delta^d (shift parameter r > 0); used to cross-check the trichotomy
bool pi_cells_intersect_geometric(int d, const std::vector<int>& sigma,
                                  const std::vector<int>& tau, const Rat& r);

}  // namespace tmc
