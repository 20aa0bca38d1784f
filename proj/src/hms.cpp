#include "tmc/hms.hpp"

#include "tmc/rng.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tmc {

namespace {

IntVec rat_to_int_vec(const RatVec& v, const char* who) {
  IntVec out;
  for (const Rat& x : v) {
    if (denominator(x) != 1)
      throw std::logic_error(std::string(who) + ": non-integral solution on a unimodular cone");
    out.push_back(numerator(x));
  }
  return out;
}

std::string chain_str(const std::vector<int>& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += "<";
    out += std::to_string(s[i]);
  }
  return out;
}

std::string pattern_str(const std::vector<bool>& pos) {
  std::string out;
  for (bool b : pos) out += b ? '+' : '-';
  return out;
}

std::vector<bool> positives_of(const IntVec& values) {
  std::vector<bool> pos(values.size());
  for (size_t i = 0; i < values.size(); ++i) pos[i] = values[i] > 0;
  return pos;
}

BoundaryPattern synth_pattern(const std::vector<bool>& pos) {
  BoundaryPattern bp;
  bp.positive = pos;
  bp.values.assign(pos.size(), 0);
  for (size_t i = 0; i < pos.size(); ++i) bp.values[i] = pos[i] ? 1 : 0;
  return bp;
}

// chains per degree, in complex basis order
std::vector<std::vector<std::vector<int>>> chains_of(
    const std::vector<std::vector<CechGenerator>>& gens) {
  std::vector<std::vector<std::vector<int>>> out(gens.size());
  for (size_t d = 0; d < gens.size(); ++d)
    for (const CechGenerator& g : gens[d]) out[d].push_back(g.chain);
  return out;
}

long total_gens(const std::vector<std::vector<CechGenerator>>& gens) {
  long s = 0;
  for (const auto& level : gens) s += (long)level.size();
  return s;
}

void acc(Cochain& dst, const Cochain& src, int sign) {
  for (const auto& [k, v] : src) {
    Int& slot = dst[k];
    slot += sign * v;
    if (slot == 0) dst.erase(k);
  }
}

// both construction routes for one positivity pattern; "" when identical
std::string compare_pattern(const ToricContext& ctx, const std::vector<bool>& pos) {
  FreeComplex via_chain = cech_complex_for_pattern(ctx, pos);
  PlusSubcomplex plus = plus_subcomplex(ctx.fp, synth_pattern(pos));
  FreeComplex via_simp = relative_cochain_complex(ctx.qb, plus);
  std::string where = "pattern " + pattern_str(pos);
  if (via_chain.basis.size() != via_simp.basis.size())
    return where + ": different number of degrees";
  for (size_t d = 0; d < via_chain.basis.size(); ++d) {
    const auto& a = via_chain.basis[d];
    const auto& b = via_simp.basis[d];
    if (a.size() != b.size())
      return where + ": generator counts differ in degree " + std::to_string(d) + " (" +
             std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")";
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i])
        return where + ": generator " + std::to_string(i) + " in degree " + std::to_string(d) +
               " differs (" + a[i] + " vs " + b[i] + ")";
  }
  for (size_t d = 0; d < via_chain.diff.size(); ++d)
    if (!(via_chain.diff[d] == via_simp.diff[d]))
      return where + ": differential matrices differ at degree " + std::to_string(d);
  return "";
}

// all composable generator products of the pattern triple, both routes
CompareCache::CupEntry cup_table(const ToricContext& ctx, const std::vector<bool>& pos_phi,
                                 const std::vector<bool>& pos_psi,
                                 const std::vector<bool>& pos_sum) {
  CompareCache::CupEntry out;
  auto gens_phi = cech_generators(ctx, pos_phi);
  auto gens_psi = cech_generators(ctx, pos_psi);
  PlusSubcomplex killed = plus_subcomplex(ctx.fp, synth_pattern(pos_sum));
  for (const auto& level_phi : gens_phi)
    for (const CechGenerator& g : level_phi) {
      Cochain phi;
      phi[g.chain] = 1;
      for (const auto& level_psi : gens_psi)
        for (const CechGenerator& h : level_psi) {
          // composable pair: phi's chain leads and hands over its last face
          if (g.chain.back() != h.chain.front()) continue;
          Cochain psi;
          psi[h.chain] = 1;
          Cochain via_chain = cech_cup(ctx, phi, pos_phi, psi, pos_psi);
          Cochain via_simp = simp_cup(ctx.qb, phi, psi, killed);
          ++out.pairs;
          if (!(via_chain == via_simp)) {
            out.err = "cup structure constants differ on (" + chain_str(g.chain) + ", " +
                      chain_str(h.chain) + ") for patterns " + pattern_str(pos_phi) + "," +
                      pattern_str(pos_psi) + "->" + pattern_str(pos_sum);
            return out;
          }
        }
    }
  return out;
}

// conversion that refuses to drop support outside the basis
std::optional<IntVec> cochain_vector_checked(const Cochain& c,
                                             const std::vector<std::vector<int>>& basis) {
  for (const auto& [k, v] : c)
    if (v != 0 && std::find(basis.begin(), basis.end(), k) == basis.end()) return std::nullopt;
  return cochain_to_vector(c, basis);
}

}  // namespace

SectionData bundle_to_sections(const ToricContext& ctx, const SupportFunction& l) {
  if (l.values.size() != ctx.fan.rays.size())
    throw std::invalid_argument("bundle_to_sections: value count != ray count");
  SectionData s;
  for (size_t vi = 0; vi < ctx.q.vertices.size(); ++vi) {
    const std::vector<int>& cone = ctx.fan.max_cones.at(ctx.q.vertex_cone[vi]);
    std::vector<IntVec> rows;
    IntVec rhs;
    for (int rho : cone) {
      rows.push_back(ctx.fan.rays[rho]);
      rhs.push_back(l.values[rho]);
    }
    auto sol = solve_linear(rows, rhs);
    if (!sol) throw std::logic_error("bundle_to_sections: singular vertex system");
    s.m.push_back(rat_to_int_vec(*sol, "bundle_to_sections"));
  }
  return s;
}

SupportFunction sections_to_bundle(const ToricContext& ctx, const SectionData& s) {
  if (s.m.size() != ctx.q.vertices.size())
    throw std::invalid_argument("sections_to_bundle: lift count != vertex count");
  const int n = ctx.fan.dim;
  for (const IntVec& m : s.m)
    if ((int)m.size() != n) throw std::invalid_argument("sections_to_bundle: lift dimension");
  // edge compatibility: lifts differ by an integer multiple of the primitive
  // tangent vector of the connecting edge
  for (const Face& f : ctx.fp.faces) {
    if (f.dim != 1) continue;
    if (f.vertex_ids.size() != 2)
      throw std::logic_error("sections_to_bundle: edge without two vertices");
    int a = f.vertex_ids[0], b = f.vertex_ids[1];
    // integral primitive tangent (vertices are integral over a smooth fan)
    RatVec ta = ctx.q.vertices[a], tb = ctx.q.vertices[b];
    IntVec t(n);
    for (int i = 0; i < n; ++i) {
      Rat d = tb[i] - ta[i];
      if (denominator(d) != 1)
        throw std::logic_error("sections_to_bundle: non-integral edge tangent");
      t[i] = numerator(d);
    }
    t = primitive(t);
    IntVec diff = vec_sub(s.m[a], s.m[b]);
    bool ok = true;
    if (!is_zero_vec(diff)) {
      int piv = -1;
      for (int i = 0; i < n && piv < 0; ++i)
        if (t[i] != 0) piv = i;
      if (piv < 0 || diff[piv] % t[piv] != 0) {
        ok = false;
      } else {
        Int k = diff[piv] / t[piv];
        for (int i = 0; i < n; ++i)
          if (diff[i] != k * t[i]) ok = false;
      }
    }
    if (!ok)
      throw std::invalid_argument(
          "sections_to_bundle: lifts at vertices " + std::to_string(a) + " and " +
          std::to_string(b) + " do not differ by a multiple of the tangent of edge face " +
          std::to_string(f.id));
  }
  // reconstruct one coefficient per ray and verify global consistency
  SupportFunction out;
  out.values.assign(ctx.fan.rays.size(), 0);
  std::vector<bool> seen(ctx.fan.rays.size(), false);
  for (size_t vi = 0; vi < ctx.q.vertices.size(); ++vi)
    for (int rho : ctx.fan.max_cones.at(ctx.q.vertex_cone[vi])) {
      Int c = dot(s.m[vi], ctx.fan.rays[rho]);
      if (!seen[rho]) {
        seen[rho] = true;
        out.values[rho] = c;
      } else if (out.values[rho] != c) {
        throw std::logic_error("sections_to_bundle: edge-compatible lifts disagree on ray " +
                               std::to_string(rho));
      }
    }
  for (size_t rho = 0; rho < seen.size(); ++rho)
    if (!seen[rho]) throw std::logic_error("sections_to_bundle: ray not covered by any vertex cone");
  return out;
}

std::optional<IntVec> sections_shift(const SectionData& a, const SectionData& b) {
  if (a.m.size() != b.m.size() || a.m.empty()) return std::nullopt;
  IntVec shift = vec_sub(a.m[0], b.m[0]);
  for (size_t i = 1; i < a.m.size(); ++i)
    if (vec_sub(a.m[i], b.m[i]) != shift) return std::nullopt;
  return shift;
}

ModelComparison compare_models(const ToricContext& ctx, const SupportFunction& l0,
                               const SupportFunction& l1, const IntVec& u, CompareCache* cache) {
  ModelComparison rep;
  CompareCache local;
  CompareCache& cc = cache ? *cache : local;
  // L2 = L1 + (L1 - L0), so the one difference drives all three sides
  SupportFunction d10 = sub_support(l1, l0);

  auto check_pattern = [&](const std::vector<bool>& pos) {
    auto it = cc.pattern_result.find(pos);
    if (it == cc.pattern_result.end())
      it = cc.pattern_result.emplace(pos, compare_pattern(ctx, pos)).first;
    ++rep.patterns_checked;
    if (!it->second.empty()) {
      rep.exact = false;
      rep.discrepancy = it->second;
      return false;
    }
    return true;
  };

  BoundaryPattern hu = h_function(ctx.fan, d10, u);
  if (!check_pattern(hu.positive)) return rep;

  std::vector<IntVec> uprimes{u};
  for (int i = 0; i < ctx.fan.dim; ++i) {
    IntVec up = u, um = u;
    up[i] += 1;
    um[i] -= 1;
    uprimes.push_back(up);
    uprimes.push_back(um);
  }
  for (const IntVec& up : uprimes) {
    BoundaryPattern hup = h_function(ctx.fan, d10, up);
    if (!check_pattern(hup.positive)) return rep;
    std::vector<bool> pos_sum = positives_of(vec_add(hu.values, hup.values));
    if (!check_pattern(pos_sum)) return rep;
    std::vector<std::vector<bool>> key{hup.positive, hu.positive, pos_sum};
    auto it = cc.cup_result.find(key);
    if (it == cc.cup_result.end())
      it = cc.cup_result.emplace(key, cup_table(ctx, hup.positive, hu.positive, pos_sum)).first;
    rep.pairs_checked += it->second.pairs;
    if (!it->second.err.empty()) {
      rep.exact = false;
      rep.discrepancy = it->second.err;
      return rep;
    }
  }
  return rep;
}

std::optional<std::string> leibniz_violation(const ToricContext& ctx,
                                             const std::vector<bool>& pos_phi,
                                             const FreeComplex& cx_phi,
                                             const std::vector<bool>& pos_psi,
                                             const FreeComplex& cx_psi,
                                             const std::vector<bool>& pos_sum,
                                             const FreeComplex& cx_sum) {
  auto ch_phi = chains_of(cech_generators(ctx, pos_phi));
  auto ch_psi = chains_of(cech_generators(ctx, pos_psi));
  auto ch_sum = chains_of(cech_generators(ctx, pos_sum));

  auto column_cochain = [](const FreeComplex& cx,
                           const std::vector<std::vector<std::vector<int>>>& ch, int deg, int j) {
    Cochain out;
    const SparseMat* m = cx.diff_at(deg);
    if (!m) return out;
    for (const auto& [rc, val] : m->entries)
      if (rc.second == j && val != 0) out[ch[deg + 1][rc.first]] = val;
    return out;
  };

  // d applied through the supplied matrices of the target complex
  auto d_sum = [&](const Cochain& c, int deg) -> std::optional<Cochain> {
    if (c.empty()) return Cochain{};
    const SparseMat* m = cx_sum.diff_at(deg);
    auto vec = cochain_vector_checked(c, ch_sum[deg]);
    if (!vec) return std::nullopt;  // support escaped the alive basis
    if (!m || m->rows == 0) return Cochain{};
    return vector_to_cochain(m->apply(*vec), ch_sum[deg + 1]);
  };

  for (size_t a = 0; a < ch_phi.size(); ++a)
    for (size_t j = 0; j < ch_phi[a].size(); ++j) {
      Cochain phi;
      phi[ch_phi[a][j]] = 1;
      Cochain dphi = column_cochain(cx_phi, ch_phi, (int)a, (int)j);
      for (size_t b = 0; b < ch_psi.size(); ++b)
        for (size_t k = 0; k < ch_psi[b].size(); ++k) {
          Cochain psi;
          psi[ch_psi[b][k]] = 1;
          Cochain dpsi = column_cochain(cx_psi, ch_psi, (int)b, (int)k);
          std::string pair_name =
              "(" + chain_str(ch_phi[a][j]) + ", " + chain_str(ch_psi[b][k]) + ")";
          Cochain prod = cech_cup(ctx, phi, pos_phi, psi, pos_psi);
          auto lhs = d_sum(prod, (int)(a + b));
          if (!lhs) return "product of " + pair_name + " left the alive basis";
          Cochain rhs = cech_cup(ctx, dphi, pos_phi, psi, pos_psi);
          acc(rhs, cech_cup(ctx, phi, pos_phi, dpsi, pos_psi), (a % 2 == 0) ? 1 : -1);
          if (!(*lhs == rhs))
            return "graded product rule fails on " + pair_name + " (degrees " + std::to_string(a) +
                   "," + std::to_string(b) + ")";
        }
    }
  return std::nullopt;
}

AxiomReport dg_axioms_check(const ToricContext& ctx, std::uint64_t seed, int instances) {
  AxiomReport rep;
  DetRng rng(seed);
  const size_t r = ctx.fan.rays.size();
  const int n = ctx.fan.dim;
  PatternCache pc;

  auto rand_support = [&] {
    SupportFunction s;
    for (size_t i = 0; i < r; ++i) s.values.push_back(rng.range(-3, 3));
    return s;
  };
  auto rand_weight = [&] {
    IntVec u;
    for (int i = 0; i < n; ++i) u.push_back(rng.range(-4, 4));
    return u;
  };
  auto note_fail = [&](std::string msg) {
    ++rep.failures;
    if (rep.notes.size() < 8) rep.notes.push_back(std::move(msg));
  };

  // memo over patterns: repeated instances revalidate for free
  std::map<std::vector<bool>, bool> d2_seen;
  std::map<std::vector<std::vector<bool>>, std::optional<std::string>> leibniz_seen;
  std::map<std::vector<bool>, std::string> unit_seen, cone_seen;

  auto run_d2 = [&](const std::vector<bool>& pos) {
    ++rep.d_squared_checks;
    auto it = d2_seen.find(pos);
    if (it == d2_seen.end()) {
      auto viol = verify_complex(pc.get(ctx, pos).first);
      it = d2_seen.emplace(pos, !viol.has_value()).first;
      if (viol)
        note_fail("d^2 != 0 for pattern " + pattern_str(pos) + " at generator " + viol->label);
    } else if (!it->second) {
      ++rep.failures;
    }
  };

  auto run_unit = [&](const std::vector<bool>& pos) {
    auto it = unit_seen.find(pos);
    if (it == unit_seen.end()) {
      std::string err;
      Cochain unit = cech_unit(ctx);
      std::vector<bool> zero_pat(r, false);
      auto gens = cech_generators(ctx, pos);
      for (const auto& level : gens)
        for (const CechGenerator& g : level) {
          Cochain x;
          x[g.chain] = 1;
          if (!(cech_cup(ctx, unit, zero_pat, x, pos) == x)) {
            err = "left unit not strict on " + chain_str(g.chain);
            break;
          }
          if (!(cech_cup(ctx, x, pos, unit, zero_pat) == x)) {
            err = "right unit not strict on " + chain_str(g.chain);
            break;
          }
        }
      it = unit_seen.emplace(pos, err).first;
    }
    ++rep.unit_checks;
    if (!it->second.empty()) note_fail(it->second);
  };

  // multiplication by the unit as a chain map; its cone must be acyclic
  auto run_cone = [&](const std::vector<bool>& pos) {
    auto it = cone_seen.find(pos);
    if (it == cone_seen.end()) {
      std::string err;
      const FreeComplex& cx = pc.get(ctx, pos).first;
      auto ch = chains_of(cech_generators(ctx, pos));
      Cochain unit = cech_unit(ctx);
      std::vector<bool> zero_pat(r, false);
      ChainMap f;
      f.source = &cx;
      f.target = &cx;
      for (size_t d = 0; d < ch.size(); ++d) {
        SparseMat m;
        m.rows = (int)ch[d].size();
        m.cols = (int)ch[d].size();
        for (size_t j = 0; j < ch[d].size(); ++j) {
          Cochain x;
          x[ch[d][j]] = 1;
          Cochain y = cech_cup(ctx, unit, zero_pat, x, pos);
          auto vec = cochain_vector_checked(y, ch[d]);
          if (!vec) {
            err = "unit multiplication left the alive basis in degree " + std::to_string(d);
            break;
          }
          for (size_t i = 0; i < vec->size(); ++i)
            if ((*vec)[i] != 0) m.set((int)i, (int)j, (*vec)[i]);
        }
        if (!err.empty()) break;
        f.components[(int)d] = std::move(m);
      }
      std::string why;
      if (err.empty() && !f.commutes(&why)) err = "unit multiplication is not a chain map: " + why;
      if (err.empty() && !cone_acyclic(f)) err = "cone of unit multiplication is not acyclic";
      if (!err.empty()) err += " (pattern " + pattern_str(pos) + ")";
      it = cone_seen.emplace(pos, err).first;
    }
    ++rep.cone_checks;
    if (!it->second.empty()) note_fail(it->second);
  };

  for (int inst = 0; inst < instances; ++inst) {
    ++rep.instances;
    SupportFunction l0 = rand_support(), l1 = rand_support(), l2 = rand_support(),
                    l3 = rand_support();
    IntVec u = rand_weight(), up = rand_weight(), upp = rand_weight();
    BoundaryPattern h10 = h_function(ctx.fan, sub_support(l1, l0), u);
    BoundaryPattern h21 = h_function(ctx.fan, sub_support(l2, l1), up);
    BoundaryPattern h32 = h_function(ctx.fan, sub_support(l3, l2), upp);
    IntVec v20 = vec_add(h21.values, h10.values);
    IntVec v31 = vec_add(h32.values, h21.values);
    IntVec v30 = vec_add(h32.values, v20);
    std::vector<bool> p20 = positives_of(v20), p31 = positives_of(v31), p30 = positives_of(v30);

    for (const auto& pos : {h10.positive, h21.positive, h32.positive, p20, p31, p30}) run_d2(pos);

    // graded product rule across Hom(L1,L2)_{u'} x Hom(L0,L1)_u
    {
      std::vector<std::vector<bool>> key{h21.positive, h10.positive, p20};
      auto it = leibniz_seen.find(key);
      if (it == leibniz_seen.end()) {
        auto viol =
            leibniz_violation(ctx, h21.positive, pc.get(ctx, h21.positive).first, h10.positive,
                              pc.get(ctx, h10.positive).first, p20, pc.get(ctx, p20).first);
        it = leibniz_seen.emplace(key, viol).first;
      }
      long pairs = total_gens(cech_generators(ctx, h21.positive)) *
                   total_gens(cech_generators(ctx, h10.positive));
      rep.leibniz_pairs += pairs;
      if (it->second) note_fail(*it->second);
    }

    // associativity of random generator triples across the weight triple
    {
      auto ch3 = chains_of(cech_generators(ctx, h32.positive));
      auto ch2 = chains_of(cech_generators(ctx, h21.positive));
      auto ch1 = chains_of(cech_generators(ctx, h10.positive));
      auto flat = [](const std::vector<std::vector<std::vector<int>>>& ch) {
        std::vector<std::vector<int>> out;
        for (const auto& level : ch) out.insert(out.end(), level.begin(), level.end());
        return out;
      };
      auto f3 = flat(ch3), f2 = flat(ch2), f1 = flat(ch1);
      if (!f3.empty() && !f2.empty() && !f1.empty()) {
        int trials = 24;
        for (int t = 0; t < trials; ++t) {
          Cochain chi, phi, psi;
          chi[f3[rng.below((long)f3.size())]] = 1;
          phi[f2[rng.below((long)f2.size())]] = 1;
          psi[f1[rng.below((long)f1.size())]] = 1;
          Cochain left = cech_cup(ctx, cech_cup(ctx, chi, h32.positive, phi, h21.positive), p31,
                                  psi, h10.positive);
          Cochain right = cech_cup(ctx, chi, h32.positive,
                                   cech_cup(ctx, phi, h21.positive, psi, h10.positive), p20);
          ++rep.assoc_triples;
          if (!(left == right)) {
            note_fail("composition is not associative on (" + chain_str(chi.begin()->first) +
                      ", " + chain_str(phi.begin()->first) + ", " +
                      chain_str(psi.begin()->first) + ")");
          }
        }
      }
    }

    run_unit(h10.positive);
    run_cone(h10.positive);
  }
  return rep;
}

}  // namespace tmc
