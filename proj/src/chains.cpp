#include "tmc/chains.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tmc {

void SparseMat::set(int r, int c, Int v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::out_of_range("SparseMat::set");
  if (v == 0)
    entries.erase({r, c});
  else
    entries[{r, c}] = std::move(v);
}

void SparseMat::add(int r, int c, const Int& v) {
  if (v == 0) return;
  Int nv = get(r, c) + v;
  set(r, c, nv);
}

Int SparseMat::get(int r, int c) const {
  auto it = entries.find({r, c});
  return it == entries.end() ? Int(0) : it->second;
}

bool SparseMat::is_zero() const { return entries.empty(); }

SparseMat SparseMat::times(const SparseMat& rhs) const {
  if (cols != rhs.rows) throw std::invalid_argument("SparseMat::times: shape mismatch");
  SparseMat out;
  out.rows = rows;
  out.cols = rhs.cols;
  // index rhs by row
  std::map<int, std::vector<std::pair<int, Int>>> by_row;
  for (const auto& [rc, v] : rhs.entries) by_row[rc.first].push_back({rc.second, v});
  for (const auto& [rc, v] : entries) {
    auto it = by_row.find(rc.second);
    if (it == by_row.end()) continue;
    for (const auto& [c2, v2] : it->second) out.add(rc.first, c2, v * v2);
  }
  return out;
}

std::vector<IntVec> SparseMat::dense() const {
  std::vector<IntVec> m(rows, IntVec(cols, 0));
  for (const auto& [rc, v] : entries) m[rc.first][rc.second] = v;
  return m;
}

IntVec SparseMat::apply(const IntVec& x) const {
  if ((int)x.size() != cols) throw std::invalid_argument("SparseMat::apply: shape mismatch");
  IntVec y(rows, 0);
  for (const auto& [rc, v] : entries) y[rc.first] += v * x[rc.second];
  return y;
}

bool SparseMat::operator==(const SparseMat& o) const {
  return rows == o.rows && cols == o.cols && entries == o.entries;
}

int FreeComplex::rank_at(int degree) const {
  int k = degree - min_degree;
  if (k < 0 || k >= (int)basis.size()) return 0;
  return (int)basis[k].size();
}

const SparseMat* FreeComplex::diff_at(int degree) const {
  int k = degree - min_degree;
  if (k < 0 || k >= (int)diff.size()) return nullptr;
  return &diff[k];
}

std::optional<ComplexViolation> verify_complex(const FreeComplex& c) {
  for (size_t k = 0; k + 1 < c.diff.size(); ++k) {
    if (c.diff[k].rows != c.diff[k + 1].cols)
      throw std::invalid_argument("verify_complex: differential shapes inconsistent");
    SparseMat sq = c.diff[k + 1].times(c.diff[k]);
    if (!sq.is_zero()) {
      int col = sq.entries.begin()->first.second;
      std::string label = col < (int)c.basis[k].size() ? c.basis[k][col] : "?";
      return ComplexViolation{c.min_degree + (int)k, col, label};
    }
  }
  return std::nullopt;
}

namespace {

struct DenseWork {
  std::vector<IntVec> m;
  std::vector<IntVec> u, v;  // row/col transforms
  bool track;
  int rows, cols;

  void swap_rows(int i, int j) {
    if (i == j) return;
    std::swap(m[i], m[j]);
    if (track) std::swap(u[i], u[j]);
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (auto& row : m) std::swap(row[i], row[j]);
    if (track)
      for (auto& row : v) std::swap(row[i], row[j]);
  }
  void row_axpy(int dst, int src, const Int& f) {  // row_dst += f * row_src
    if (f == 0) return;
    for (int j = 0; j < cols; ++j) m[dst][j] += f * m[src][j];
    if (track)
      for (int j = 0; j < rows; ++j) u[dst][j] += f * u[src][j];
  }
  void col_axpy(int dst, int src, const Int& f) {
    if (f == 0) return;
    for (int i = 0; i < rows; ++i) m[i][dst] += f * m[i][src];
    if (track)
      for (int i = 0; i < cols; ++i) v[i][dst] += f * v[i][src];
  }
  void negate_row(int i) {
    for (int j = 0; j < cols; ++j) m[i][j] = -m[i][j];
    if (track)
      for (int j = 0; j < rows; ++j) u[i][j] = -u[i][j];
  }
};

// Quotient rounded to the nearest integer, so the remainder a - q*b satisfies
// |a - q*b| <= |b| / 2.  Used to make every pivot-improvement step at least
// halve the pivot, which keeps intermediate entries from compounding.
Int round_quotient(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (Int(2) * abs(r) > Int(abs(b))) q += ((r > 0) == (b > 0)) ? 1 : -1;
  return q;
}

}  // namespace

SnfResult smith_normal_form(const SparseMat& mat, bool want_transforms) {
  DenseWork w;
  w.m = mat.dense();
  w.rows = mat.rows;
  w.cols = mat.cols;
  w.track = want_transforms;
  if (want_transforms) {
    w.u.assign(w.rows, IntVec(w.rows, 0));
    for (int i = 0; i < w.rows; ++i) w.u[i][i] = 1;
    w.v.assign(w.cols, IntVec(w.cols, 0));
    for (int i = 0; i < w.cols; ++i) w.v[i][i] = 1;
  }

  const int n = std::min(w.rows, w.cols);
  int t = 0;
  while (t < n) {
    // pivot: nonzero entry of minimal absolute value in the trailing block
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < w.rows; ++i)
      for (int j = t; j < w.cols; ++j) {
        if (w.m[i][j] == 0) continue;
        Int a = abs(w.m[i][j]);
        if (pi < 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing block zero
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    for (;;) {
      // Shrink the pivot until it divides every entry of its row and column.
      // Each fix touches two lines, leaves a remainder of at most half the
      // pivot in the pivot slot, and restarts the scan.  Clearing a whole
      // line with a non-dividing pivot instead (and retrying on the
      // remainders) re-multiplies the trailing block every pass and blows
      // entry sizes up doubly exponentially on dense input.
      bool settled = false;
      while (!settled) {
        settled = true;
        for (int i = t + 1; i < w.rows; ++i) {
          if (w.m[i][t] % w.m[t][t] == 0) continue;
          Int q = round_quotient(w.m[i][t], w.m[t][t]);
          w.row_axpy(i, t, -q);
          w.swap_rows(t, i);  // remainder becomes the new, smaller pivot
          settled = false;
          break;
        }
        if (!settled) continue;
        for (int j = t + 1; j < w.cols; ++j) {
          if (w.m[t][j] % w.m[t][t] == 0) continue;
          Int q = round_quotient(w.m[t][j], w.m[t][t]);
          w.col_axpy(j, t, -q);
          w.swap_cols(t, j);
          settled = false;
          break;
        }
      }
      // Pivot divides its row and column: clear both in one exact pass.
      for (int i = t + 1; i < w.rows; ++i) {
        if (w.m[i][t] == 0) continue;
        Int q = w.m[i][t] / w.m[t][t];
        w.row_axpy(i, t, -q);
      }
      for (int j = t + 1; j < w.cols; ++j) {
        if (w.m[t][j] == 0) continue;
        Int q = w.m[t][j] / w.m[t][t];
        w.col_axpy(j, t, -q);
      }
      // Enforce divisibility of the trailing block by the pivot.
      bool chained = true;
      for (int i = t + 1; i < w.rows && chained; ++i)
        for (int j = t + 1; j < w.cols && chained; ++j)
          if (w.m[i][j] % w.m[t][t] != 0) {
            w.row_axpy(t, i, 1);  // pull the offending row up; pivot shrinks next pass
            chained = false;
          }
      if (chained) break;
    }
    if (w.m[t][t] < 0) w.negate_row(t);
    ++t;
  }

  SnfResult res;
  res.rank = t;
  for (int i = 0; i < t; ++i) res.divisors.push_back(w.m[i][i]);
  for (int i = 0; i + 1 < t; ++i)
    if (res.divisors[i + 1] % res.divisors[i] != 0)
      throw std::logic_error("smith_normal_form: divisibility chain violated");
  if (want_transforms) {
    res.u = std::move(w.u);
    res.v = std::move(w.v);
    res.with_transforms = true;
  }
  return res;
}

long CohomologyResult::rank(int degree) const {
  auto it = groups.find(degree);
  return it == groups.end() ? 0 : it->second.free_rank;
}

const CohGroup* CohomologyResult::at(int degree) const {
  auto it = groups.find(degree);
  return it == groups.end() ? nullptr : &it->second;
}

long CohomologyResult::total_rank() const {
  long s = 0;
  for (const auto& [d, g] : groups) s += g.free_rank;
  return s;
}

Int CohomologyResult::euler() const {
  Int s = 0;
  for (const auto& [d, g] : groups) s += (d % 2 == 0 ? 1 : -1) * Int(g.free_rank);
  return s;
}

std::string CohomologyResult::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, g] : groups) {
    if (!first) os << ", ";
    first = false;
    os << "H^" << d << "=Z^" << g.free_rank;
    for (const Int& t : g.torsion) os << "+Z/" << t;
  }
  if (first) os << "0";
  return os.str();
}

CohomologyResult cohomology(const FreeComplex& c) {
  if (auto bad = verify_complex(c))
    throw std::invalid_argument("cohomology: not a complex at degree " + std::to_string(bad->degree));
  CohomologyResult res;
  std::vector<SnfResult> snf(c.diff.size());
  for (size_t k = 0; k < c.diff.size(); ++k) snf[k] = smith_normal_form(c.diff[k]);
  for (size_t k = 0; k < c.basis.size(); ++k) {
    long dim_k = (long)c.basis[k].size();
    long rank_out = k < c.diff.size() ? snf[k].rank : 0;
    long rank_in = k > 0 ? snf[k - 1].rank : 0;
    CohGroup g;
    g.free_rank = dim_k - rank_out - rank_in;
    if (g.free_rank < 0) throw std::logic_error("cohomology: negative rank");
    if (k > 0)
      for (const Int& d : snf[k - 1].divisors)
        if (d > 1) g.torsion.push_back(d);
    if (!g.trivial()) res.groups[c.min_degree + (int)k] = g;
  }
  return res;
}

bool ChainMap::commutes(std::string* why) const {
  if (!source || !target) throw std::invalid_argument("ChainMap: missing endpoints");
  int lo = std::min(source->min_degree, target->min_degree) - 1;
  int hi = std::max(source->min_degree + source->degrees(), target->min_degree + target->degrees()) + 1;
  for (int d = lo; d <= hi; ++d) {
    int src_rank = source->rank_at(d);
    if (src_rank == 0) continue;
    int tgt_next = target->rank_at(d + 1);
    // f_{d+1} o d_source == d_target o f_d  (absent component = zero map)
    SparseMat lhs, rhs;
    lhs.rows = rhs.rows = tgt_next;
    lhs.cols = rhs.cols = src_rank;
    const SparseMat* ds = source->diff_at(d);
    auto f_next = components.find(d + 1);
    if (ds && f_next != components.end()) lhs = f_next->second.times(*ds);
    const SparseMat* dt = target->diff_at(d);
    auto f_d = components.find(d);
    if (dt && f_d != components.end()) rhs = dt->times(f_d->second);
    lhs.rows = rhs.rows = tgt_next;  // normalize shapes of zero maps
    lhs.cols = rhs.cols = src_rank;
    if (!(lhs == rhs)) {
      if (why) *why = "chain map fails to commute at degree " + std::to_string(d);
      return false;
    }
  }
  return true;
}

FreeComplex mapping_cone(const ChainMap& f) {
  std::string why;
  if (!f.commutes(&why)) throw std::invalid_argument("mapping_cone: " + why);
  const FreeComplex& s = *f.source;
  const FreeComplex& t = *f.target;
  // cone^d = target^d + source^{d+1}; d(x, y) = (d_t x + f y, -d_s y)
  int lo = std::min(t.min_degree, s.min_degree - 1);
  int hi = std::max(t.min_degree + t.degrees() - 1, s.min_degree + s.degrees() - 2);
  FreeComplex cone;
  cone.min_degree = lo;
  for (int d = lo; d <= hi; ++d) {
    std::vector<std::string> labels;
    for (int i = 0; i < t.rank_at(d); ++i) labels.push_back("t:" + t.basis[d - t.min_degree][i]);
    for (int i = 0; i < s.rank_at(d + 1); ++i) labels.push_back("s:" + s.basis[d + 1 - s.min_degree][i]);
    cone.basis.push_back(std::move(labels));
  }
  for (int d = lo; d <= hi; ++d) {
    int tr = t.rank_at(d), sr = s.rank_at(d + 1);
    int tr1 = t.rank_at(d + 1), sr1 = s.rank_at(d + 2);
    SparseMat m;
    m.rows = tr1 + sr1;
    m.cols = tr + sr;
    if (const SparseMat* dt = t.diff_at(d))
      for (const auto& [rc, v] : dt->entries) m.add(rc.first, rc.second, v);
    auto fc = f.components.find(d + 1);
    if (fc != f.components.end())
      for (const auto& [rc, v] : fc->second.entries) m.add(rc.first, tr + rc.second, v);
    if (const SparseMat* ds = s.diff_at(d + 1))
      for (const auto& [rc, v] : ds->entries) m.add(tr1 + rc.first, tr + rc.second, -v);
    cone.diff.push_back(std::move(m));
  }
  return cone;
}

bool cone_acyclic(const ChainMap& f) { return cohomology(mapping_cone(f)).trivial(); }

}  // namespace tmc
