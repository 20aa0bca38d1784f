#pragma once

// Exact arithmetic kernel: arbitrary-precision integers/rationals, small dense
// linear algebra, and Fourier-Motzkin elimination for rational feasibility.
// No floating point anywhere in the geometry pipeline.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace tmc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

Int dot(const IntVec& a, const IntVec& b);
Rat dot_rat(const RatVec& a, const IntVec& b);
bool is_zero_vec(const IntVec& a);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_neg(const IntVec& a);

// gcd of absolute values, 0 if all zero
Int vec_gcd(const IntVec& a);
// divide by gcd; zero vector unchanged
IntVec primitive(const IntVec& a);

Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);

// determinant of a square integer matrix (fraction-free Bareiss)
Int det_int(std::vector<IntVec> m);

// solve A x = rhs for square A over the rationals; nullopt if singular
std::optional<RatVec> solve_linear(const std::vector<IntVec>& a, const IntVec& rhs);

// affine rank of a point set (rank of differences), exact
int affine_rank(const std::vector<RatVec>& pts);

// one linear constraint  a.x <= b  (strict: a.x < b)
struct LinRow {
  IntVec a;
  Int b;
  bool strict = false;
};

// conjunction of constraints over Q^dim
struct IneqSystem {
  int dim = 0;
  std::vector<LinRow> rows;

  void add(IntVec a, Int b, bool strict = false);
};

// rational feasibility by Fourier-Motzkin elimination
bool fm_feasible(const IneqSystem& sys);

// projection of the feasible set onto one coordinate
struct CoordInterval {
  bool feasible = false;
  bool lower_bounded = false;
  bool upper_bounded = false;
  Rat lo;
  Rat hi;
};
CoordInterval fm_interval(const IneqSystem& sys, int coord);

// recession cone {a.x <= 0} == {0}?  (true also for infeasible systems)
bool fm_bounded(const IneqSystem& sys);

// all integer points of a bounded system, lexicographically sorted;
// throws std::invalid_argument if some coordinate projection is unbounded
std::vector<IntVec> integer_points(const IneqSystem& sys);

// is p in conv(pts)?  exact LP via slack variables + FM
bool in_convex_hull(const RatVec& p, const std::vector<RatVec>& pts);

std::string vec_to_string(const IntVec& v);

}  // namespace tmc
