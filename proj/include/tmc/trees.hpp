#pragma once

// Rooted planar (ribbon) trees, Stasheff facet data, shrubs, and the sign
// apparatus: edge labels, dexterity, orientation data, wall-crossing
// invariance, and the closed-form parity functions.

#include "tmc/exact.hpp"

#include <string>
#include <vector>

namespace tmc {

// finite positive rational length or the infinite tag (never a sentinel)
struct EdgeLen {
  bool infinite = false;
  Rat length = 0;
};

// vertex 0 is the node (the internal vertex of the outgoing edge); edge v
// (v >= 1) joins vertex v to its parent; edge 0 is the outgoing edge
struct RibbonTree {
  struct Vertex {
    int parent = -1;
    std::vector<int> children;  // left to right; empty for leaves
    int leaf_index = 0;         // 1..d on leaves, 0 otherwise
  };
  std::vector<Vertex> vertices;
  std::vector<EdgeLen> edges;  // size == vertices.size()
  int d = 0;                   // number of leaves

  bool is_leaf(int v) const { return vertices[v].children.empty(); }
  bool trivalent() const;  // every internal vertex has exactly two children
};

// structural soundness: parent/child mirrors, >= 2 children at internal
// vertices, leaves numbered 1..d in planar order; throws std::invalid_argument
void validate_tree(const RibbonTree& t);

// all planar types with d leaves (internal vertices >= 2 children), or only
// the trivalent ones; d >= 2
std::vector<RibbonTree> enumerate_ribbon_trees(int d, bool trivalent_only);

// codimension-one boundary data (d1, d2, i): split d1 + d2 = d + 1 with both
// parts >= 2, inner vertex attached at slot i in 1..d1
struct StasheffFacet {
  int d1 = 0;
  int d2 = 0;
  int i = 0;
};

std::vector<StasheffFacet> stasheff_facets(int d);  // d >= 2

// the formal difference f_i - f_j carried by an edge
struct EdgeLabel {
  int j = 0;
  int i = 0;
};

// label per edge id: incoming edge k gets (k-1, k), outgoing (0, d); verifies
// the telescoping balance at every internal vertex
std::vector<EdgeLabel> label_edges(const RibbonTree& t);

// number of right turns on the geodesic from edge e to the outgoing vertex,
// including the turn into the outgoing edge: ascending from a left child is a
// right turn; requires a trivalent tree
int dexterity(const RibbonTree& t, int e);

// the ordered coordinate edges (arc sets of the incoming vertices, each
// ordered from the node upward) and the product of (-1)^dexterity
struct ShrubOrientation {
  std::vector<int> edge_order;
  int sign = 1;
};

ShrubOrientation shrub_orientation(const RibbonTree& t);

// one quadrivalent type, resolved both ways and compared in the common
// coordinates (collapsed-edge differentials identified up to the sign flip)
struct WallCheck {
  bool pass = false;
  std::string description;
};

std::vector<WallCheck> wall_crossing_check(int d);  // d >= 3

// i + sum of the first i degrees, mod 2
int maltese(int i, const std::vector<long>& degs);

// literal evaluation of the orientation twist
// (m+1) * ( sum_{j=0}^{d} (deg_q + sum_{k<=j} deg_p_k) + dim_t*(1+m+d+deg_q) ),
// reduced mod 2
int sigma_twist(long deg_q, const std::vector<long>& degs_p, long dim_t, long m);

// strata of the compactified shrub moduli boundary
struct ShrubBoundary {
  std::vector<std::vector<int>> horizontal;  // compositions of d into d' < d parts
  bool all_infinite_section = true;          // the section stratum is always present
  std::vector<std::vector<int>> vertical;    // compositions with some part != 1
};

ShrubBoundary shrub_boundary_types(int d);

// metric shrub: finite incoming edges, infinite outgoing edge
struct Shrub {
  RibbonTree tree;
  bool equidistant = false;  // all incoming vertices at one distance from the node
};

// throws std::invalid_argument unless incoming edges are finite and the
// outgoing edge is infinite
Shrub make_shrub(RibbonTree t);

// internal edges get length 1, leaf edges top every leaf up to equal depth
void assign_equidistant_lengths(RibbonTree& t);

}  // namespace tmc
