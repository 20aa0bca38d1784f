#pragma once

// The mirror dictionary: line bundles <-> integral vertex lifts, bit-level
// agreement of the chain-of-faces and relative-cochain constructions of the
// Hom complexes, and randomized DG axiom suites.

#include "tmc/cech.hpp"
#include "tmc/chains.hpp"
#include "tmc/exact.hpp"
#include "tmc/lattice.hpp"
#include "tmc/simp.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tmc {

// one integer lift per vertex of the cover polytope (vertex <-> maximal cone);
// compatible when the lifts across each edge differ by an integer multiple of
// the edge's primitive tangent vector
struct SectionData {
  std::vector<IntVec> m;  // indexed like ctx.q.vertices
};

// m_v solves <m, v_rho> = c_rho over the rays of the cone dual to v
SectionData bundle_to_sections(const ToricContext& ctx, const SupportFunction& l);

// reconstructs c_rho = <m_v, v_rho> from any vertex whose cone contains rho;
// throws std::invalid_argument naming the first incompatible edge
SupportFunction sections_to_bundle(const ToricContext& ctx, const SectionData& s);

// the global shift a - b when it is one constant vector, else nullopt
std::optional<IntVec> sections_shift(const SectionData& a, const SectionData& b);

struct ModelComparison {
  bool exact = true;
  std::string discrepancy;  // first mismatch, empty when exact
  long patterns_checked = 0;
  long pairs_checked = 0;  // composable generator pairs whose products matched
};

// memo for bulk sweeps: complexes depend only on the positivity pattern and
// cup tables only on the pattern triple
struct CompareCache {
  struct CupEntry {
    std::string err;
    long pairs = 0;
  };
  std::map<std::vector<bool>, std::string> pattern_result;
  std::map<std::vector<std::vector<bool>>, CupEntry> cup_result;
};

// verifies, at weight u of Hom(L0,L1) and the weight triples (u', u, u+u')
// with u' in {u} union {u +- e_i}, that both constructions give identical
// generator sets, differential matrices, and cup structure constants into
// Hom(L0, L2), L2 = L1 + (L1 - L0)
ModelComparison compare_models(const ToricContext& ctx, const SupportFunction& l0,
                               const SupportFunction& l1, const IntVec& u,
                               CompareCache* cache = nullptr);

// graded product rule d(phi.psi) = d(phi).psi + (-1)^{|phi|} phi.d(psi) over
// all basis pairs, with caller-supplied differentials (a corrupted matrix is
// reported, naming the violating pair); the three complexes must belong to
// the given positivity patterns
std::optional<std::string> leibniz_violation(
    const ToricContext& ctx, const std::vector<bool>& pos_phi, const FreeComplex& cx_phi,
    const std::vector<bool>& pos_psi, const FreeComplex& cx_psi, const std::vector<bool>& pos_sum,
    const FreeComplex& cx_sum);

struct AxiomReport {
  int instances = 0;
  long d_squared_checks = 0;
  long leibniz_pairs = 0;
  long assoc_triples = 0;
  long unit_checks = 0;
  long cone_checks = 0;
  int failures = 0;
  std::vector<std::string> notes;  // first few failure descriptions

  bool ok() const { return failures == 0; }
};

// randomized bundle/weight triples on one fan: d^2 = 0, Leibniz,
// associativity, strict unit, and acyclicity of the cone of unit
// multiplication
AxiomReport dg_axioms_check(const ToricContext& ctx, std::uint64_t seed, int instances);

}  // namespace tmc
