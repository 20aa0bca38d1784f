#pragma once

// Tropical hypersurface of a Laurent mirror: complement regions labeled by
// dominating terms, exact full-dimension/boundedness analysis, the Fano
// diagnostic, and the planar corner-locus skeleton.

#include "tmc/exact.hpp"
#include "tmc/lattice.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tmc {

struct TropicalTerm {
  IntVec alpha;  // exponent
  Int nu;        // weight
};

// max over terms of <u, alpha> - nu(alpha); the constant term (0, nu_0) is
// required by the mirror construction and checked by `regions`
struct TropicalPolynomial {
  int dim = 0;
  std::vector<TropicalTerm> terms;
};

// where one term dominates all others
struct Region {
  IntVec alpha;
  IneqSystem inequalities;  // <u, beta - alpha> <= nu(beta) - nu(alpha), redundancy kept
  bool full_dim = false;    // strict system feasible
  bool bounded = false;     // recession cone trivial
};

// one region per term; throws std::invalid_argument on empty/duplicate terms
// or a missing zero exponent
std::vector<Region> regions(const TropicalPolynomial& w);

std::vector<Region> bounded_regions(const TropicalPolynomial& w);  // full-dim and bounded

// true iff every term dominates somewhere with nonempty interior
bool is_maximal_subdivision(const TropicalPolynomial& w);

// mirror polynomial of a fan: constant term plus one term per ray with nu = psi
TropicalPolynomial mirror_polynomial(const Fan& fan, const SupportFunction& psi);

struct FanoReport {
  TropicalPolynomial w;
  std::vector<Region> all_regions;
  std::vector<size_t> bounded_full_dim;  // indices into all_regions
  bool extra_bounded_region = false;     // some bounded region other than C_0
  bool c0_matches_polytope = false;      // normalized inequalities of C_0 == those of Q
  std::string warning;                   // set when the subdivision is not maximal
};

FanoReport fano_diagnostic(const Fan& fan, const SupportFunction& psi);

// corner locus of the tropical max in the plane
struct Skeleton {
  std::vector<RatVec> vertices;
  std::vector<std::pair<RatVec, RatVec>> bounded_edges;
  std::vector<std::pair<RatVec, IntVec>> rays;  // origin, primitive direction
};

// exact pairwise-tie analysis; requires dim == 2
Skeleton amoeba_skeleton_2d(const TropicalPolynomial& w);

// rows normalized to primitive (coefficients + bound) and sorted, for
// coefficient-level equality of inequality systems
std::vector<LinRow> normalized_rows(const IneqSystem& sys);

}  // namespace tmc
