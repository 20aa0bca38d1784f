#include "tmc/tropical.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tmc {

namespace {

void validate_terms(const TropicalPolynomial& w) {
  if (w.terms.empty()) throw std::invalid_argument("tropical: no terms");
  if (w.dim <= 0) throw std::invalid_argument("tropical: nonpositive dimension");
  std::set<IntVec> seen;
  bool has_zero = false;
  for (const TropicalTerm& t : w.terms) {
    if ((int)t.alpha.size() != w.dim)
      throw std::invalid_argument("tropical: exponent dimension mismatch");
    if (!seen.insert(t.alpha).second)
      throw std::invalid_argument("tropical: duplicate exponent " + vec_to_string(t.alpha));
    if (is_zero_vec(t.alpha)) has_zero = true;
  }
  if (!has_zero) throw std::invalid_argument("tropical: constant term (zero exponent) missing");
}

}  // namespace

std::vector<Region> regions(const TropicalPolynomial& w) {
  validate_terms(w);
  std::vector<Region> out;
  for (size_t i = 0; i < w.terms.size(); ++i) {
    Region reg;
    reg.alpha = w.terms[i].alpha;
    reg.inequalities.dim = w.dim;
    for (size_t j = 0; j < w.terms.size(); ++j) {
      if (j == i) continue;
      reg.inequalities.add(vec_sub(w.terms[j].alpha, w.terms[i].alpha),
                           w.terms[j].nu - w.terms[i].nu);
    }
    IneqSystem interior = reg.inequalities;
    for (LinRow& row : interior.rows) row.strict = true;
    reg.full_dim = fm_feasible(interior);
    reg.bounded = fm_bounded(reg.inequalities);
    out.push_back(std::move(reg));
  }
  return out;
}

std::vector<Region> bounded_regions(const TropicalPolynomial& w) {
  std::vector<Region> out;
  for (Region& reg : regions(w))
    if (reg.full_dim && reg.bounded) out.push_back(std::move(reg));
  return out;
}

bool is_maximal_subdivision(const TropicalPolynomial& w) {
  for (const Region& reg : regions(w))
    if (!reg.full_dim) return false;
  return true;
}

TropicalPolynomial mirror_polynomial(const Fan& fan, const SupportFunction& psi) {
  if (psi.values.size() != fan.rays.size())
    throw std::invalid_argument("mirror_polynomial: value count != ray count");
  TropicalPolynomial w;
  w.dim = fan.dim;
  w.terms.push_back(TropicalTerm{IntVec(fan.dim, 0), 0});
  for (size_t i = 0; i < fan.rays.size(); ++i)
    w.terms.push_back(TropicalTerm{fan.rays[i], psi.values[i]});
  return w;
}

std::vector<LinRow> normalized_rows(const IneqSystem& sys) {
  std::vector<LinRow> rows = sys.rows;
  for (LinRow& row : rows) {
    Int g = vec_gcd(row.a);
    g = boost::multiprecision::gcd(g, abs(row.b));
    if (g > 1) {
      for (Int& x : row.a) x /= g;
      row.b /= g;
    }
  }
  std::sort(rows.begin(), rows.end(), [](const LinRow& x, const LinRow& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.strict < y.strict;
  });
  return rows;
}

namespace {

bool rows_equal(const std::vector<LinRow>& a, const std::vector<LinRow>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].a != b[i].a || a[i].b != b[i].b || a[i].strict != b[i].strict) return false;
  return true;
}

}  // namespace

FanoReport fano_diagnostic(const Fan& fan, const SupportFunction& psi) {
  FanoReport rep;
  rep.w = mirror_polynomial(fan, psi);
  rep.all_regions = regions(rep.w);
  for (size_t i = 0; i < rep.all_regions.size(); ++i) {
    const Region& reg = rep.all_regions[i];
    if (reg.full_dim && reg.bounded) {
      rep.bounded_full_dim.push_back(i);
      if (!is_zero_vec(reg.alpha)) rep.extra_bounded_region = true;
    }
  }
  Polytope q = polytope_from_support(fan, psi);
  rep.c0_matches_polytope =
      rows_equal(normalized_rows(rep.all_regions.at(0).inequalities), normalized_rows(q.inequalities()));
  for (size_t i = 0; i < rep.all_regions.size(); ++i)
    if (!rep.all_regions[i].full_dim) {
      rep.warning = "subdivision is not maximal: term " + vec_to_string(rep.all_regions[i].alpha) +
                    " never dominates an open set";
      break;
    }
  return rep;
}

Skeleton amoeba_skeleton_2d(const TropicalPolynomial& w) {
  if (w.dim != 2) throw std::invalid_argument("amoeba_skeleton_2d: dimension must be 2");
  validate_terms(w);
  Skeleton sk;
  std::set<RatVec> vertex_set;
  std::set<std::pair<RatVec, RatVec>> edge_set;
  std::set<std::pair<RatVec, IntVec>> ray_set;

  for (size_t i = 0; i < w.terms.size(); ++i)
    for (size_t j = i + 1; j < w.terms.size(); ++j) {
      IntVec delta = vec_sub(w.terms[i].alpha, w.terms[j].alpha);  // tie: <u,delta> = c
      Int c = w.terms[i].nu - w.terms[j].nu;
      int piv = delta[0] != 0 ? 0 : 1;
      RatVec p0(2, Rat(0));
      p0[piv] = Rat(c) / Rat(delta[piv]);
      IntVec dir = primitive(IntVec{-delta[1], delta[0]});
      // dominance of the tied pair over every other term along p0 + t*dir
      bool empty = false, has_lo = false, has_hi = false;
      Rat lo = 0, hi = 0;
      for (size_t k = 0; k < w.terms.size() && !empty; ++k) {
        if (k == i || k == j) continue;
        Int s = dot(dir, vec_sub(w.terms[i].alpha, w.terms[k].alpha));
        Rat rhs = dot_rat(p0, vec_sub(w.terms[k].alpha, w.terms[i].alpha)) +
                  Rat(w.terms[i].nu - w.terms[k].nu);
        if (s == 0) {
          if (rhs > 0) empty = true;
        } else if (s > 0) {
          Rat bound = rhs / Rat(s);
          if (!has_lo || bound > lo) lo = bound;
          has_lo = true;
        } else {
          Rat bound = rhs / Rat(s);
          if (!has_hi || bound < hi) hi = bound;
          has_hi = true;
        }
      }
      if (empty || (has_lo && has_hi && lo > hi)) continue;
      auto at = [&](const Rat& t) {
        RatVec p = p0;
        p[0] += t * Rat(dir[0]);
        p[1] += t * Rat(dir[1]);
        return p;
      };
      if (has_lo && has_hi) {
        if (lo == hi) continue;  // pinched to a point, no edge
        RatVec a = at(lo), b = at(hi);
        vertex_set.insert(a);
        vertex_set.insert(b);
        edge_set.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
      } else if (has_lo) {
        RatVec a = at(lo);
        vertex_set.insert(a);
        ray_set.insert({a, dir});
      } else if (has_hi) {
        RatVec a = at(hi);
        vertex_set.insert(a);
        ray_set.insert({a, vec_neg(dir)});
      } else {
        // full line: two opposite rays from the base point
        ray_set.insert({p0, dir});
        ray_set.insert({p0, vec_neg(dir)});
      }
    }
  sk.vertices.assign(vertex_set.begin(), vertex_set.end());
  sk.bounded_edges.assign(edge_set.begin(), edge_set.end());
  sk.rays.assign(ray_set.begin(), ray_set.end());
  return sk;
}

}  // namespace tmc
