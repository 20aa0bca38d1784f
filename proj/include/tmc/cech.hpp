#pragma once

// Cech model for morphisms of line bundles over a smooth complete fan: weight
// graded complexes of nested face chains, composition by chain concatenation,
// and exact weight-by-weight cohomology via positivity-pattern chambers.

#include "tmc/chains.hpp"
#include "tmc/exact.hpp"
#include "tmc/lattice.hpp"
#include "tmc/simp.hpp"

#include <map>
#include <string>
#include <vector>

namespace tmc {

// one nested chain of face ids, strictly increasing in the total order
struct CechGenerator {
  std::vector<int> chain;
};

// fixed per-fan geometry shared by every weight computation
struct ToricContext {
  Fan fan;
  SupportFunction psi;  // ample support function cutting the cover polytope
  Polytope q;
  FacePoset fp;
  OrderedComplex qb;  // barycentric subdivision; simplices == nested chains
};

// validates (throws on non-smooth/non-complete fan or non-strictly-convex psi)
ToricContext make_context(Fan fan, SupportFunction psi);

// admissible generators for the positivity pattern: a chain survives unless
// every face lies in the outward boundary
std::vector<std::vector<CechGenerator>> cech_generators(const ToricContext& ctx,
                                                        const std::vector<bool>& positive);

// the weight-u piece of Hom(L0, L1): relative chain complex with the signed
// face-insertion differential
FreeComplex cech_complex(const ToricContext& ctx, const SupportFunction& l0,
                         const SupportFunction& l1, const IntVec& u);

// same complex from a precomputed pattern (the complex depends only on it)
FreeComplex cech_complex_for_pattern(const ToricContext& ctx, const std::vector<bool>& positive);

// composition Hom(L1,L2)_{u'} x Hom(L0,L1)_u -> Hom(L0,L2)_{u+u'};
// on generators the first argument's chain comes first and its last face must
// equal the second argument's first face; satisfies the graded product rule
// d(phi.psi) = d(phi).psi + (-1)^{deg phi} phi.d(psi)
Cochain cech_cup(const ToricContext& ctx, const Cochain& phi, const std::vector<bool>& positive_phi,
                 const Cochain& psi, const std::vector<bool>& positive_psi);

// identity morphism of Hom(L,L) at weight 0: constant 1 on all length-1 chains
Cochain cech_unit(const ToricContext& ctx);

// chamber certificate of one positivity pattern
struct ChamberInfo {
  std::vector<bool> positive;
  CohomologyResult coh;       // cohomology of the pattern complex
  bool bounded = false;       // chamber recession cone trivial (checked when coh nonzero)
  std::vector<IntVec> weights;  // lattice points of the chamber (when coh nonzero)
};

struct GradedHom {
  SupportFunction diff;               // L1 - L0
  std::map<IntVec, CohomologyResult> pieces;  // nonzero weights only
  std::vector<ChamberInfo> certificate;

  long rank(const IntVec& u, int degree) const;
  long total_rank(int degree) const;
};

// pattern-keyed cache: the pattern complex and its cohomology are independent
// of the bundle difference, so bulk sweeps share them
struct PatternCache {
  std::map<std::vector<bool>, std::pair<FreeComplex, CohomologyResult>> entries;

  const std::pair<FreeComplex, CohomologyResult>& get(const ToricContext& ctx,
                                                      const std::vector<bool>& positive);
};

// all weights with nonzero cohomology, by exhaustive positivity-pattern
// chamber analysis; throws std::runtime_error if a nonzero pattern has an
// unbounded chamber (cannot happen over a complete smooth fan)
GradedHom graded_hom(const ToricContext& ctx, const SupportFunction& l0, const SupportFunction& l1,
                     PatternCache* cache = nullptr);

// alternating sum of total ranks; equals the lattice point count of the
// difference polytope whenever the difference is ample
Int euler_characteristic(const ToricContext& ctx, const SupportFunction& l0,
                         const SupportFunction& l1);

}  // namespace tmc
