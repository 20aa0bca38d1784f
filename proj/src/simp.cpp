#include "tmc/simp.hpp"

#include <algorithm>
#include <stdexcept>

namespace tmc {

bool OrderedComplex::has_simplex(const std::vector<int>& s) const {
  return index_of((int)s.size() - 1, s) >= 0;
}

int OrderedComplex::index_of(int dim, const std::vector<int>& s) const {
  if (dim < 0 || dim >= (int)simplices.size()) return -1;
  const auto& level = simplices[dim];
  auto it = std::lower_bound(level.begin(), level.end(), s);
  if (it == level.end() || *it != s) return -1;
  return (int)(it - level.begin());
}

OrderedComplex barycentric(const FacePoset& fp) {
  OrderedComplex oc;
  oc.n_vertices = (int)fp.faces.size();
  // chains enumerated by DFS over the total order; nesting checked pairwise
  std::vector<std::vector<std::vector<int>>> by_dim;
  std::vector<int> chain;
  auto extend = [&](auto&& self, int last) -> void {
    int dim = (int)chain.size() - 1;
    if ((int)by_dim.size() <= dim) by_dim.resize(dim + 1);
    by_dim[dim].push_back(chain);
    for (int next = last + 1; next < oc.n_vertices; ++next) {
      if (!fp.leq(last, next) || last == next) continue;
      // strict nesting: equal vertex sets collapse to the same face, so leq +
      // distinct ids is strict containment
      chain.push_back(next);
      self(self, next);
      chain.pop_back();
    }
  };
  for (int v = 0; v < oc.n_vertices; ++v) {
    chain.assign(1, v);
    extend(extend, v);
  }
  for (auto& level : by_dim) std::sort(level.begin(), level.end());
  oc.simplices = std::move(by_dim);
  return oc;
}

OrderedComplex full_simplex(int d) {
  if (d < 0) throw std::invalid_argument("full_simplex: negative dimension");
  OrderedComplex oc;
  oc.n_vertices = d + 1;
  oc.simplices.resize(d + 1);
  for (int mask = 1; mask < (1 << (d + 1)); ++mask) {
    std::vector<int> s;
    for (int v = 0; v <= d; ++v)
      if (mask & (1 << v)) s.push_back(v);
    oc.simplices[s.size() - 1].push_back(std::move(s));
  }
  for (auto& level : oc.simplices) std::sort(level.begin(), level.end());
  return oc;
}

bool PlusSubcomplex::simplex_member(const std::vector<int>& s) const {
  for (int v : s)
    if (!vertex_member.at(v)) return false;
  return true;
}

PlusSubcomplex plus_subcomplex(const FacePoset& fp, const BoundaryPattern& pattern) {
  PlusSubcomplex a;
  a.vertex_member.resize(fp.faces.size(), false);
  for (const Face& f : fp.faces)
    a.vertex_member[f.id] = face_in_plus_boundary(f, pattern.positive);
  return a;
}

PlusSubcomplex full_subcomplex(int n_vertices, const std::vector<int>& members) {
  PlusSubcomplex a;
  a.vertex_member.resize(n_vertices, false);
  for (int v : members) a.vertex_member.at(v) = true;
  return a;
}

std::vector<std::vector<std::vector<int>>> alive_simplices(const OrderedComplex& oc,
                                                           const PlusSubcomplex& a) {
  std::vector<std::vector<std::vector<int>>> alive(oc.simplices.size());
  for (size_t d = 0; d < oc.simplices.size(); ++d)
    for (const auto& s : oc.simplices[d])
      if (!a.simplex_member(s)) alive[d].push_back(s);
  return alive;
}

namespace {

std::string simplex_label(const std::vector<int>& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += "<";
    out += std::to_string(s[i]);
  }
  return out;
}

}  // namespace

FreeComplex relative_cochain_complex(const OrderedComplex& oc, const PlusSubcomplex& a) {
  auto alive = alive_simplices(oc, a);
  FreeComplex c;
  c.min_degree = 0;
  // index maps per degree
  std::vector<std::map<std::vector<int>, int>> index(alive.size());
  for (size_t d = 0; d < alive.size(); ++d) {
    std::vector<std::string> labels;
    for (size_t i = 0; i < alive[d].size(); ++i) {
      index[d][alive[d][i]] = (int)i;
      labels.push_back(simplex_label(alive[d][i]));
    }
    c.basis.push_back(std::move(labels));
  }
  // coboundary: (d phi)(W) = phi(boundary W); matrix entry [W, V] = sign of V in dW
  for (size_t d = 0; d < alive.size(); ++d) {
    SparseMat m;
    m.cols = (int)alive[d].size();
    m.rows = d + 1 < alive.size() ? (int)alive[d + 1].size() : 0;
    if (d + 1 < alive.size()) {
      for (size_t wi = 0; wi < alive[d + 1].size(); ++wi) {
        const auto& w = alive[d + 1][wi];
        for (size_t drop = 0; drop < w.size(); ++drop) {
          std::vector<int> v;
          for (size_t i = 0; i < w.size(); ++i)
            if (i != drop) v.push_back(w[i]);
          auto it = index[d].find(v);
          if (it == index[d].end()) continue;  // face killed by the subcomplex
          m.add((int)wi, it->second, (drop % 2 == 0) ? 1 : -1);
        }
      }
    }
    c.diff.push_back(std::move(m));
  }
  return c;
}

Cochain simp_cup(const OrderedComplex& oc, const Cochain& phi, const Cochain& psi,
                 const PlusSubcomplex& target_killed) {
  Cochain out;
  for (const auto& level : oc.simplices) {
    for (const auto& w : level) {
      if (target_killed.simplex_member(w)) continue;
      Int acc = 0;
      for (size_t i = 0; i < w.size(); ++i) {
        std::vector<int> front(w.begin(), w.begin() + i + 1);
        std::vector<int> back(w.begin() + i, w.end());
        auto pf = phi.find(front);
        if (pf == phi.end() || pf->second == 0) continue;
        auto pb = psi.find(back);
        if (pb == psi.end() || pb->second == 0) continue;
        acc += pf->second * pb->second;
      }
      if (acc != 0) out[w] = acc;
    }
  }
  return out;
}

IntVec cochain_to_vector(const Cochain& c, const std::vector<std::vector<int>>& basis) {
  IntVec v(basis.size(), 0);
  for (size_t i = 0; i < basis.size(); ++i) {
    auto it = c.find(basis[i]);
    if (it != c.end()) v[i] = it->second;
  }
  return v;
}

Cochain vector_to_cochain(const IntVec& v, const std::vector<std::vector<int>>& basis) {
  if (v.size() != basis.size()) throw std::invalid_argument("vector_to_cochain: size mismatch");
  Cochain c;
  for (size_t i = 0; i < basis.size(); ++i)
    if (v[i] != 0) c[basis[i]] = v[i];
  return c;
}

PiResult pi_intersect_collapse(const OrderedComplex& oc, const std::vector<int>& sigma,
                               const std::vector<int>& tau) {
  if (sigma.empty() || tau.empty())
    throw std::invalid_argument("pi_intersect_collapse: empty cell");
  PiResult res;
  int uk = sigma.back(), w0 = tau.front();
  if (uk > w0) return res;  // empty
  std::vector<int> merged = sigma;
  if (uk == w0) {
    merged.insert(merged.end(), tau.begin() + 1, tau.end());
    if (oc.has_simplex(merged)) {
      res.tag = PiTag::same_dimension;
      res.target = std::move(merged);
    }
    return res;
  }
  merged.insert(merged.end(), tau.begin(), tau.end());
  if (oc.has_simplex(merged)) {
    res.tag = PiTag::collapsed;
    res.target = std::move(merged);
  }
  return res;
}

Cochain cell_intersection_product(const OrderedComplex& oc, const Cochain& a, const Cochain& b) {
  Cochain out;
  for (const auto& [sa, ca] : a) {
    if (ca == 0) continue;
    for (const auto& [sb, cb] : b) {
      if (cb == 0) continue;
      PiResult r = pi_intersect_collapse(oc, sa, sb);
      // codim(target) = codim(a) + codim(b) only in the same-dimension case;
      // collapsed intersections lose a dimension under coll and contribute 0
      if (r.tag != PiTag::same_dimension) continue;
      Int& slot = out[r.target];
      slot += ca * cb;
      if (slot == 0) out.erase(r.target);
    }
  }
  return out;
}

Cochain cell_to_simp(const Cochain& cellular) { return cellular; }

FreeComplex cell_complex(const OrderedComplex& oc, const PlusSubcomplex& a) {
  auto alive = alive_simplices(oc, a);
  FreeComplex c;
  c.min_degree = 0;
  std::vector<std::map<std::vector<int>, int>> index(alive.size());
  for (size_t d = 0; d < alive.size(); ++d) {
    std::vector<std::string> labels;
    for (size_t i = 0; i < alive[d].size(); ++i) {
      index[d][alive[d][i]] = (int)i;
      labels.push_back(simplex_label(alive[d][i]));
    }
    c.basis.push_back(std::move(labels));
  }
  // cellular boundary of the dual cell of V: cofaces of V with the sign of the
  // inserted vertex's position (the orientation convention making the
  // relabeling to simplicial cochains sign-free)
  for (size_t d = 0; d < alive.size(); ++d) {
    SparseMat m;
    m.cols = (int)alive[d].size();
    m.rows = d + 1 < alive.size() ? (int)alive[d + 1].size() : 0;
    if (d + 1 < alive.size()) {
      for (size_t vi = 0; vi < alive[d].size(); ++vi) {
        const auto& v = alive[d][vi];
        for (size_t wi = 0; wi < alive[d + 1].size(); ++wi) {
          const auto& w = alive[d + 1][wi];
          // is v a sub-chain of w with exactly one extra element?
          int extra_pos = -1;
          size_t iv = 0;
          bool sub = true;
          for (size_t iw = 0; iw < w.size(); ++iw) {
            if (iv < v.size() && w[iw] == v[iv]) {
              ++iv;
            } else if (extra_pos < 0) {
              extra_pos = (int)iw;
            } else {
              sub = false;
              break;
            }
          }
          if (!sub || iv != v.size() || extra_pos < 0) continue;
          m.add((int)wi, (int)vi, (extra_pos % 2 == 0) ? 1 : -1);
        }
      }
    }
    c.diff.push_back(std::move(m));
  }
  return c;
}

bool pi_cells_intersect_geometric(int d, const std::vector<int>& sigma,
                                  const std::vector<int>& tau, const Rat& r) {
  // dual cell of [u_0..u_k] in the local model on R^d: x_{u_0} = ... = x_{u_k}
  // >= x_m for all m in 0..d, with x_0 := 0 the constant term; the second copy
  // is translated by (-r/d, -r/(d-1), ..., -r/1)
  if (r <= 0) throw std::invalid_argument("pi_cells_intersect_geometric: need r > 0");
  // integral coordinates y = (d! * den(r)) * x; then the shifted copy's value
  // at coordinate i reads y_i + num(r) * d!/(d+1-i), an exact integer offset
  Int den = denominator(r), num = numerator(r);
  Int fact = 1;
  for (int i = 1; i <= d; ++i) fact *= i;
  (void)den;  // the scale d!*den cancels from all comparisons; offsets only need num
  auto offset = [&](int idx, bool shifted) -> Int {
    if (!shifted || idx == 0) return 0;
    return num * (fact / (d + 1 - idx));
  };
  auto coeff = [&](IntVec& row, int idx, int c) {
    if (idx > 0) row[idx - 1] += c;  // index 0 is the constant-zero term
  };
  IneqSystem sys;
  sys.dim = d;
  auto add_cell = [&](const std::vector<int>& cell, bool shifted) {
    for (size_t j = 1; j < cell.size(); ++j) {
      // val(c_0) == val(c_j)
      IntVec row(d, 0);
      coeff(row, cell[0], 1);
      coeff(row, cell[j], -1);
      Int b = offset(cell[j], shifted) - offset(cell[0], shifted);
      sys.add(row, b, false);
      sys.add(vec_neg(row), -b, false);
    }
    for (int m = 0; m <= d; ++m) {
      // val(m) <= val(c_0)
      IntVec row(d, 0);
      coeff(row, m, 1);
      coeff(row, cell[0], -1);
      sys.add(row, offset(cell[0], shifted) - offset(m, shifted), false);
    }
  };
  add_cell(sigma, false);
  add_cell(tau, true);
  return fm_feasible(sys);
}

}  // namespace tmc
