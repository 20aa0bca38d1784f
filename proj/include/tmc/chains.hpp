#pragma once

// Bounded complexes of free Z-modules with exact integer cohomology.
// Differentials raise degree by one; homological data is stored reindexed.

#include "tmc/exact.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tmc {

// sparse integer matrix, deterministic triplet order
struct SparseMat {
  int rows = 0;
  int cols = 0;
  std::map<std::pair<int, int>, Int> entries;

  void set(int r, int c, Int v);
  void add(int r, int c, const Int& v);
  Int get(int r, int c) const;
  bool is_zero() const;
  SparseMat times(const SparseMat& rhs) const;  // this * rhs
  std::vector<IntVec> dense() const;
  IntVec apply(const IntVec& x) const;  // matrix * vector
  bool operator==(const SparseMat& o) const;
};

struct FreeComplex {
  int min_degree = 0;
  std::vector<std::vector<std::string>> basis;  // labels per degree, degree = min_degree + index
  std::vector<SparseMat> diff;                  // diff[k]: degree k piece -> k+1 piece; size == basis.size()

  int degrees() const { return (int)basis.size(); }
  int rank_at(int degree) const;
  const SparseMat* diff_at(int degree) const;  // nullptr outside range
};

// first failure of dо d == 0, if any
struct ComplexViolation {
  int degree;      // the source degree of the composite that failed
  int column;      // source basis index
  std::string label;
};
std::optional<ComplexViolation> verify_complex(const FreeComplex& c);

struct SnfResult {
  std::vector<Int> divisors;       // nonzero diagonal, divisibility chain, positive
  int rank = 0;
  std::vector<IntVec> u, v;        // optional transforms: u * m * v = diag(divisors)
  bool with_transforms = false;
};
SnfResult smith_normal_form(const SparseMat& m, bool want_transforms = false);

struct CohGroup {
  long free_rank = 0;
  std::vector<Int> torsion;  // elementary divisors > 1
  bool operator==(const CohGroup& o) const { return free_rank == o.free_rank && torsion == o.torsion; }
  bool trivial() const { return free_rank == 0 && torsion.empty(); }
};

struct CohomologyResult {
  std::map<int, CohGroup> groups;  // only nontrivial degrees

  long rank(int degree) const;
  const CohGroup* at(int degree) const;
  bool trivial() const { return groups.empty(); }
  long total_rank() const;
  Int euler() const;  // alternating sum of free ranks
  bool operator==(const CohomologyResult& o) const { return groups == o.groups; }
  std::string to_string() const;
};

CohomologyResult cohomology(const FreeComplex& c);

struct ChainMap {
  const FreeComplex* source = nullptr;
  const FreeComplex* target = nullptr;
  // components[k] maps source degree (source->min_degree + k) to the same absolute degree of target
  std::map<int, SparseMat> components;  // keyed by absolute degree

  bool commutes(std::string* why = nullptr) const;
};

FreeComplex mapping_cone(const ChainMap& f);
bool cone_acyclic(const ChainMap& f);

}  // namespace tmc
