#include "tmc/cech.hpp"

#include <algorithm>
#include <stdexcept>

namespace tmc {

ToricContext make_context(Fan fan, SupportFunction psi) {
  FanDiagnostics d = validate_fan(fan, psi);
  if (!d.smooth) throw std::invalid_argument("make_context: fan is not smooth");
  if (!d.complete) throw std::invalid_argument("make_context: fan is not complete");
  if (!d.strictly_convex)
    throw std::invalid_argument("make_context: support function is not strictly convex");
  ToricContext ctx;
  ctx.fan = std::move(fan);
  ctx.psi = std::move(psi);
  ctx.q = polytope_from_support(ctx.fan, ctx.psi);
  if (!ctx.q.feasible) throw std::invalid_argument("make_context: empty cover polytope");
  ctx.fp = face_poset(ctx.q);
  ctx.qb = barycentric(ctx.fp);
  return ctx;
}

std::vector<std::vector<CechGenerator>> cech_generators(const ToricContext& ctx,
                                                        const std::vector<bool>& positive) {
  // a face is outward iff one of its active inequalities is positive; a chain
  // dies iff all of its faces are outward (equivalently its top face is, since
  // outwardness is downward closed along nesting)
  std::vector<bool> outward(ctx.fp.faces.size());
  for (const Face& f : ctx.fp.faces) outward[f.id] = face_in_plus_boundary(f, positive);
  std::vector<std::vector<CechGenerator>> gens(ctx.qb.simplices.size());
  for (size_t d = 0; d < ctx.qb.simplices.size(); ++d)
    for (const auto& chain : ctx.qb.simplices[d]) {
      bool all_out = true;
      for (int f : chain)
        if (!outward[f]) {
          all_out = false;
          break;
        }
      if (!all_out) gens[d].push_back(CechGenerator{chain});
    }
  return gens;
}

namespace {

std::string chain_label(const std::vector<int>& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += "<";
    out += std::to_string(s[i]);
  }
  return out;
}

std::vector<bool> pattern_of(const ToricContext& ctx, const SupportFunction& l0,
                             const SupportFunction& l1, const IntVec& u) {
  return h_function(ctx.fan, sub_support(l1, l0), u).positive;
}

}  // namespace

FreeComplex cech_complex_for_pattern(const ToricContext& ctx, const std::vector<bool>& positive) {
  auto gens = cech_generators(ctx, positive);
  FreeComplex c;
  c.min_degree = 0;
  std::vector<std::map<std::vector<int>, int>> index(gens.size());
  for (size_t d = 0; d < gens.size(); ++d) {
    std::vector<std::string> labels;
    for (size_t i = 0; i < gens[d].size(); ++i) {
      index[d][gens[d][i].chain] = (int)i;
      labels.push_back(chain_label(gens[d][i].chain));
    }
    c.basis.push_back(std::move(labels));
  }
  // differential: insert one face, keeping the chain nested; inserting after
  // position j carries sign (-1)^{j+1}, front insertion +1
  for (size_t d = 0; d < gens.size(); ++d) {
    SparseMat m;
    m.cols = (int)gens[d].size();
    m.rows = d + 1 < gens.size() ? (int)gens[d + 1].size() : 0;
    if (d + 1 < gens.size()) {
      for (size_t gi = 0; gi < gens[d].size(); ++gi) {
        const auto& chain = gens[d][gi].chain;
        for (int f = 0; f < (int)ctx.fp.faces.size(); ++f) {
          if (std::binary_search(chain.begin(), chain.end(), f)) continue;
          // insertion slot by total order
          size_t pos = std::lower_bound(chain.begin(), chain.end(), f) - chain.begin();
          // nesting: predecessor < f < successor in the face order
          if (pos > 0 && !ctx.fp.leq(chain[pos - 1], f)) continue;
          if (pos < chain.size() && !ctx.fp.leq(f, chain[pos])) continue;
          std::vector<int> bigger = chain;
          bigger.insert(bigger.begin() + pos, f);
          auto it = index[d + 1].find(bigger);
          if (it == index[d + 1].end()) continue;  // inadmissible (cannot occur from alive chains)
          m.add(it->second, (int)gi, (pos % 2 == 0) ? 1 : -1);
        }
      }
    }
    c.diff.push_back(std::move(m));
  }
  return c;
}

FreeComplex cech_complex(const ToricContext& ctx, const SupportFunction& l0,
                         const SupportFunction& l1, const IntVec& u) {
  if (!ctx.q.feasible) throw std::invalid_argument("cech_complex: empty cover polytope");
  return cech_complex_for_pattern(ctx, pattern_of(ctx, l0, l1, u));
}

Cochain cech_cup(const ToricContext& ctx, const Cochain& phi, const std::vector<bool>& positive_phi,
                 const Cochain& psi, const std::vector<bool>& positive_psi) {
  std::vector<bool> outward_phi(ctx.fp.faces.size()), outward_psi(ctx.fp.faces.size());
  for (const Face& f : ctx.fp.faces) {
    outward_phi[f.id] = face_in_plus_boundary(f, positive_phi);
    outward_psi[f.id] = face_in_plus_boundary(f, positive_psi);
  }
  auto alive = [](const std::vector<int>& chain, const std::vector<bool>& outward) {
    for (int f : chain)
      if (!outward[f]) return true;
    return false;
  };
  Cochain out;
  for (const auto& [qc, qv] : phi) {
    if (qv == 0 || !alive(qc, outward_phi)) continue;
    for (const auto& [pc, pv] : psi) {
      if (pv == 0 || !alive(pc, outward_psi)) continue;
      // first argument's chain first; shared middle face
      if (qc.back() != pc.front()) continue;
      std::vector<int> concat = qc;
      concat.insert(concat.end(), pc.begin() + 1, pc.end());
      // nesting is automatic (both chains nested through the shared face).
      // the result is alive for the summed values without explicit filtering:
      // were its top face outward there, some active ray would be positive
      // for one summand at a ray where the other is nonpositive, so one
      // factor's whole chain would be outward for its own pattern, and that
      // factor was already filtered out
      Int& slot = out[concat];
      slot += qv * pv;
      if (slot == 0) out.erase(concat);
    }
  }
  return out;
}

Cochain cech_unit(const ToricContext& ctx) {
  Cochain e;
  for (const auto& chain : ctx.qb.simplices.at(0)) e[chain] = 1;
  return e;
}

long GradedHom::rank(const IntVec& u, int degree) const {
  auto it = pieces.find(u);
  return it == pieces.end() ? 0 : it->second.rank(degree);
}

long GradedHom::total_rank(int degree) const {
  long s = 0;
  for (const auto& [u, coh] : pieces) s += coh.rank(degree);
  return s;
}

const std::pair<FreeComplex, CohomologyResult>& PatternCache::get(
    const ToricContext& ctx, const std::vector<bool>& positive) {
  auto it = entries.find(positive);
  if (it == entries.end()) {
    FreeComplex c = cech_complex_for_pattern(ctx, positive);
    CohomologyResult coh = cohomology(c);
    it = entries.emplace(positive, std::make_pair(std::move(c), std::move(coh))).first;
  }
  return it->second;
}

GradedHom graded_hom(const ToricContext& ctx, const SupportFunction& l0,
                     const SupportFunction& l1, PatternCache* cache) {
  GradedHom gh;
  gh.diff = sub_support(l1, l0);
  const size_t r = ctx.fan.rays.size();
  if (r > 30) throw std::invalid_argument("graded_hom: too many rays for pattern enumeration");
  PatternCache local;
  PatternCache& pc = cache ? *cache : local;
  for (size_t mask = 0; mask < (size_t(1) << r); ++mask) {
    ChamberInfo info;
    info.positive.resize(r);
    for (size_t i = 0; i < r; ++i) info.positive[i] = (mask >> i) & 1;
    info.coh = pc.get(ctx, info.positive).second;
    if (!info.coh.trivial()) {
      // chamber: H_rho >= 1 on positive rays, <= 0 elsewhere (exact on Z^n)
      IneqSystem chamber;
      chamber.dim = ctx.fan.dim;
      for (size_t i = 0; i < r; ++i) {
        if (info.positive[i])
          chamber.add(vec_neg(ctx.fan.rays[i]), -(gh.diff.values[i] + 1));
        else
          chamber.add(ctx.fan.rays[i], gh.diff.values[i]);
      }
      info.bounded = fm_bounded(chamber);
      if (!info.bounded)
        throw std::runtime_error(
            "graded_hom: nonzero cohomology on an unbounded chamber (malformed fan input)");
      info.weights = integer_points(chamber);
      for (const IntVec& u : info.weights) gh.pieces[u] = info.coh;
    }
    gh.certificate.push_back(std::move(info));
  }
  return gh;
}

Int euler_characteristic(const ToricContext& ctx, const SupportFunction& l0,
                         const SupportFunction& l1) {
  GradedHom gh = graded_hom(ctx, l0, l1);
  Int chi = 0;
  for (const auto& [u, coh] : gh.pieces) chi += coh.euler();
  return chi;
}

}  // namespace tmc
