#include "tmc/exact.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tmc {

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot_rat(const RatVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot_rat: dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

bool is_zero_vec(const IntVec& a) {
  for (const Int& x : a)
    if (x != 0) return false;
  return true;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: dimension mismatch");
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: dimension mismatch");
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec vec_neg(const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Int vec_gcd(const IntVec& a) {
  Int g = 0;
  for (const Int& x : a) g = gcd(g, abs(x));
  return g;
}

IntVec primitive(const IntVec& a) {
  Int g = vec_gcd(a);
  if (g <= 1) return a;
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
  return r;
}

Int rat_floor(const Rat& r) {
  Int n = numerator(r), d = denominator(r);  // d > 0
  Int q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

Int det_int(std::vector<IntVec> m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det_int: not square");
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::optional<RatVec> solve_linear(const std::vector<IntVec>& a, const IntVec& rhs) {
  const size_t n = a.size();
  if (rhs.size() != n) throw std::invalid_argument("solve_linear: shape mismatch");
  std::vector<RatVec> m(n, RatVec(n + 1));
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("solve_linear: not square");
    for (size_t j = 0; j < n; ++j) m[i][j] = Rat(a[i][j]);
    m[i][n] = Rat(rhs[i]);
  }
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[k], m[p]);
    Rat piv = m[k][k];
    for (size_t j = k; j <= n; ++j) m[k][j] /= piv;
    for (size_t i = 0; i < n; ++i) {
      if (i == k || m[i][k] == 0) continue;
      Rat f = m[i][k];
      for (size_t j = k; j <= n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  RatVec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = m[i][n];
  return x;
}

int affine_rank(const std::vector<RatVec>& pts) {
  if (pts.empty()) return -1;
  const size_t n = pts[0].size();
  std::vector<RatVec> rows;
  for (size_t i = 1; i < pts.size(); ++i) {
    RatVec r(n);
    for (size_t j = 0; j < n; ++j) r[j] = pts[i][j] - pts[0][j];
    rows.push_back(std::move(r));
  }
  int rank = 0;
  for (size_t col = 0; col < n && rank < (int)rows.size(); ++col) {
    size_t p = rank;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if ((int)i == rank || rows[i][col] == 0) continue;
      Rat f = rows[i][col] / rows[rank][col];
      for (size_t j = col; j < n; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

void IneqSystem::add(IntVec a, Int b, bool strict) {
  if ((int)a.size() != dim) throw std::invalid_argument("IneqSystem::add: dimension mismatch");
  rows.push_back(LinRow{std::move(a), std::move(b), strict});
}

namespace {

// normalize by gcd of coefficients AND bound (keeps integrality exact)
void normalize_row(LinRow& r) {
  Int g = vec_gcd(r.a);
  g = gcd(g, abs(r.b));
  if (g > 1) {
    for (Int& x : r.a) x /= g;
    r.b /= g;
  }
}

// returns false and sets infeasible if a trivially violated row appears
bool check_terminal(const LinRow& r) {
  // all-zero coefficients: 0 <= b (or 0 < b)
  return r.strict ? (r.b > 0) : (r.b >= 0);
}

struct RowKey {
  IntVec a;
  Int b;
  bool strict;
  bool operator<(const RowKey& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return strict < o.strict;
  }
};

// eliminate variable `var`; returns false on detected infeasibility
bool fm_step(std::vector<LinRow>& rows, int var) {
  std::vector<LinRow> pos, neg, zero;
  for (auto& r : rows) {
    if (r.a[var] > 0)
      pos.push_back(std::move(r));
    else if (r.a[var] < 0)
      neg.push_back(std::move(r));
    else
      zero.push_back(std::move(r));
  }
  std::set<RowKey> seen;
  std::vector<LinRow> out;
  auto push = [&](LinRow r) -> bool {
    normalize_row(r);
    if (is_zero_vec(r.a)) return check_terminal(r);
    RowKey k{r.a, r.b, r.strict};
    if (seen.insert(k).second) out.push_back(std::move(r));
    return true;
  };
  for (auto& r : zero)
    if (!push(std::move(r))) return false;
  for (const auto& p : pos)
    for (const auto& n : neg) {
      // (-n_k) * p + p_k * n cancels x_var; both multipliers positive
      Int mp = -n.a[var], mn = p.a[var];
      LinRow c;
      c.a.resize(p.a.size());
      for (size_t j = 0; j < p.a.size(); ++j) c.a[j] = mp * p.a[j] + mn * n.a[j];
      c.b = mp * p.b + mn * n.b;
      c.strict = p.strict || n.strict;
      if (!push(std::move(c))) return false;
    }
  rows = std::move(out);
  return true;
}

// eliminate every variable except `keep` (-1: all); false = infeasible
bool fm_run(std::vector<LinRow>& rows, int dim, int keep) {
  // pre-scan for terminal rows
  std::vector<LinRow> live;
  for (auto& r : rows) {
    normalize_row(r);
    if (is_zero_vec(r.a)) {
      if (!check_terminal(r)) return false;
    } else {
      live.push_back(std::move(r));
    }
  }
  rows = std::move(live);
  for (int v = 0; v < dim; ++v) {
    if (v == keep) continue;
    if (!fm_step(rows, v)) return false;
  }
  return true;
}

}  // namespace

bool fm_feasible(const IneqSystem& sys) {
  std::vector<LinRow> rows = sys.rows;
  return fm_run(rows, sys.dim, -1);
}

CoordInterval fm_interval(const IneqSystem& sys, int coord) {
  if (coord < 0 || coord >= sys.dim) throw std::invalid_argument("fm_interval: bad coordinate");
  CoordInterval res;
  std::vector<LinRow> rows = sys.rows;
  if (!fm_run(rows, sys.dim, coord)) return res;  // infeasible
  res.feasible = true;
  bool has_lo = false, has_hi = false;
  Rat lo, hi;
  for (const auto& r : rows) {
    const Int& c = r.a[coord];
    if (c == 0) continue;  // already checked terminal in fm_run
    Rat bound = Rat(r.b) / Rat(c);
    if (c > 0) {
      if (!has_hi || bound < hi) hi = bound, has_hi = true;
    } else {
      if (!has_lo || bound > lo) lo = bound, has_lo = true;
    }
  }
  // empty interval possible when strict rows meet
  if (has_lo && has_hi && lo > hi) {
    res.feasible = false;
    return res;
  }
  res.lower_bounded = has_lo;
  res.upper_bounded = has_hi;
  if (has_lo) res.lo = lo;
  if (has_hi) res.hi = hi;
  return res;
}

bool fm_bounded(const IneqSystem& sys) {
  // recession cone: homogeneous weak system
  IneqSystem rec;
  rec.dim = sys.dim;
  for (const auto& r : sys.rows) rec.add(r.a, 0, false);
  for (int i = 0; i < sys.dim; ++i) {
    for (int s : {1, -1}) {
      IneqSystem probe = rec;
      IntVec a(sys.dim, 0);
      a[i] = -s;  // s=+1: x_i >= 1, s=-1: x_i <= -1
      probe.add(a, -1, false);
      if (fm_feasible(probe)) return false;
    }
  }
  return true;
}

namespace {

void scan_box(const IneqSystem& sys, const std::vector<std::pair<Int, Int>>& box, int coord,
              IntVec& point, std::vector<IntVec>& out) {
  if (coord == sys.dim) {
    for (const auto& r : sys.rows) {
      Int v = dot(r.a, point);
      if (r.strict ? !(v < r.b) : !(v <= r.b)) return;
    }
    out.push_back(point);
    return;
  }
  for (Int x = box[coord].first; x <= box[coord].second; ++x) {
    point[coord] = x;
    scan_box(sys, box, coord + 1, point, out);
  }
}

}  // namespace

std::vector<IntVec> integer_points(const IneqSystem& sys) {
  std::vector<std::pair<Int, Int>> box(sys.dim);
  for (int i = 0; i < sys.dim; ++i) {
    CoordInterval iv = fm_interval(sys, i);
    if (!iv.feasible) return {};
    if (!iv.lower_bounded || !iv.upper_bounded)
      throw std::invalid_argument("integer_points: unbounded system");
    box[i] = {rat_ceil(iv.lo), rat_floor(iv.hi)};
    if (box[i].first > box[i].second) return {};
  }
  std::vector<IntVec> out;
  IntVec point(sys.dim);
  scan_box(sys, box, 0, point, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool in_convex_hull(const RatVec& p, const std::vector<RatVec>& pts) {
  if (pts.empty()) return false;
  const int n = (int)p.size();
  const int k = (int)pts.size();
  // variables: lambda_1..lambda_k; constraints: lambda >= 0, sum = 1, sum lambda_i pts_i = p
  // clear denominators to keep the system integral
  IneqSystem sys;
  sys.dim = k;
  for (int i = 0; i < k; ++i) {
    IntVec a(k, 0);
    a[i] = -1;
    sys.add(a, 0, false);  // lambda_i >= 0
  }
  {
    IntVec ones(k, 1);
    sys.add(ones, 1, false);
    sys.add(vec_neg(ones), -1, false);  // sum lambda = 1
  }
  for (int c = 0; c < n; ++c) {
    // common denominator over p[c] and all pts[i][c]
    Int common = denominator(p[c]);
    for (int i = 0; i < k; ++i) common = common * (denominator(pts[i][c]) / gcd(common, denominator(pts[i][c])));
    IntVec a(k);
    for (int i = 0; i < k; ++i) a[i] = numerator(pts[i][c]) * (common / denominator(pts[i][c]));
    Int b = numerator(p[c]) * (common / denominator(p[c]));
    sys.add(a, b, false);
    sys.add(vec_neg(a), -b, false);
  }
  return fm_feasible(sys);
}

std::string vec_to_string(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace tmc
