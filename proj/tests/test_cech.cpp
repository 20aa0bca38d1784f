#include "doctest.h"
#include "tmc/cech.hpp"
#include "tmc/simp.hpp"

#include <vector>

using namespace tmc;

namespace {

IntVec iv(std::vector<long long> v) {
  IntVec out;
  for (long long x : v) out.emplace_back(x);
  return out;
}

SupportFunction sf(std::vector<long long> v) {
  SupportFunction s;
  s.values = iv(v);
  return s;
}

Fan p1_fan() {
  Fan f;
  f.dim = 1;
  f.rays = {iv({1}), iv({-1})};
  f.max_cones = {{0}, {1}};
  return f;
}

Fan p2_fan() {
  Fan f;
  f.dim = 2;
  f.rays = {iv({1, 0}), iv({0, 1}), iv({-1, -1})};
  f.max_cones = {{0, 1}, {1, 2}, {2, 0}};
  return f;
}

ToricContext p1_ctx() { return make_context(p1_fan(), sf({1, 1})); }
ToricContext p2_ctx() { return make_context(p2_fan(), sf({1, 1, 1})); }

bool same_complex(const FreeComplex& a, const FreeComplex& b) {
  if (a.min_degree != b.min_degree) return false;
  if (a.basis != b.basis) return false;
  if (a.diff.size() != b.diff.size()) return false;
  for (size_t k = 0; k < a.diff.size(); ++k) {
    if (!(a.diff[k] == b.diff[k])) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("cech") {
  TEST_CASE("context construction rejects bad input") {
    CHECK_THROWS_AS(make_context(p2_fan(), sf({1, 1, -5})), std::invalid_argument);

    Fan incomplete = p2_fan();
    incomplete.max_cones.pop_back();
    CHECK_THROWS_AS(make_context(incomplete, sf({1, 1, 1})), std::invalid_argument);

    Fan singular;
    singular.dim = 2;
    singular.rays = {iv({1, 0}), iv({0, 1}), iv({-1, -2})};
    singular.max_cones = {{0, 1}, {1, 2}, {2, 0}};
    CHECK_THROWS_AS(make_context(singular, sf({1, 1, 1})), std::invalid_argument);
  }

  TEST_CASE("generator counts on the interval cover") {
    ToricContext ctx = p1_ctx();
    // no outward facets: every nested chain of the 3 faces survives
    auto all = cech_generators(ctx, {false, false});
    REQUIRE(all.size() == 2);
    CHECK(all[0].size() == 3);
    CHECK(all[1].size() == 2);

    // one outward facet kills exactly the chain sitting on that vertex
    auto one = cech_generators(ctx, {true, false});
    CHECK(one[0].size() == 2);
    CHECK(one[1].size() == 2);

    // both vertices outward: only chains reaching the top face survive
    auto both = cech_generators(ctx, {true, true});
    CHECK(both[0].size() == 1);
    CHECK(both[1].size() == 2);
  }

  TEST_CASE("negative interval bundle concentrates in top degree") {
    ToricContext ctx = p1_ctx();
    GradedHom gh = graded_hom(ctx, sf({0, 0}), sf({-2, 0}));
    REQUIRE(gh.pieces.size() == 1);
    CHECK(gh.pieces.count(iv({-1})) == 1);
    CHECK(gh.rank(iv({-1}), 1) == 1);
    CHECK(gh.total_rank(1) == 1);
    CHECK(gh.total_rank(0) == 0);
    CHECK(euler_characteristic(ctx, sf({0, 0}), sf({-2, 0})) == -1);
  }

  TEST_CASE("positive interval bundle gives one section per weight") {
    ToricContext ctx = p1_ctx();
    GradedHom gh = graded_hom(ctx, sf({0, 0}), sf({1, 1}));
    CHECK(gh.pieces.size() == 3);
    for (long long u : {-1LL, 0LL, 1LL}) {
      CHECK(gh.rank(iv({u}), 0) == 1);
      CHECK(gh.rank(iv({u}), 1) == 0);
    }
    CHECK(gh.total_rank(0) == 3);
    CHECK(gh.total_rank(1) == 0);
    CHECK(euler_characteristic(ctx, sf({0, 0}), sf({1, 1})) == 3);
  }

  TEST_CASE("anticanonical-degree negative bundle on the plane") {
    ToricContext ctx = p2_ctx();
    GradedHom gh = graded_hom(ctx, sf({0, 0, 0}), sf({-1, -1, -1}));
    REQUIRE(gh.pieces.size() == 1);
    CHECK(gh.rank(iv({0, 0}), 2) == 1);
    CHECK(gh.total_rank(0) == 0);
    CHECK(gh.total_rank(1) == 0);
    CHECK(gh.total_rank(2) == 1);
    CHECK(euler_characteristic(ctx, sf({0, 0, 0}), sf({-1, -1, -1})) == 1);
  }

  TEST_CASE("degree-one bundle on the plane has three sections") {
    ToricContext ctx = p2_ctx();
    GradedHom gh = graded_hom(ctx, sf({0, 0, 0}), sf({0, 0, 1}));
    CHECK(gh.pieces.size() == 3);
    for (auto u : {iv({0, 0}), iv({-1, 0}), iv({0, -1})}) {
      CHECK(gh.rank(u, 0) == 1);
    }
    CHECK(gh.total_rank(0) == 3);
    CHECK(gh.total_rank(1) == 0);
    CHECK(gh.total_rank(2) == 0);
  }

  TEST_CASE("euler characteristic counts lattice points of ample differences") {
    ToricContext ctx = p2_ctx();
    for (auto l1 : {sf({1, 1, 1}), sf({0, 0, 1}), sf({2, 1, 1})}) {
      Int chi = euler_characteristic(ctx, sf({0, 0, 0}), l1);
      Polytope qd = polytope_from_support(ctx.fan, l1);
      CHECK(chi == (long long)lattice_points(qd).size());
    }
    // the anticanonical square: ten points
    CHECK(euler_characteristic(ctx, sf({0, 0, 0}), sf({1, 1, 1})) == 10);
  }

  TEST_CASE("weight complex depends only on the positivity pattern") {
    ToricContext ctx = p2_ctx();
    SupportFunction l0 = sf({0, 0, 0});
    for (auto l1 : {sf({0, 0, 1}), sf({-1, -1, -1}), sf({2, 0, -1})}) {
      SupportFunction diff = sub_support(l1, l0);
      for (auto u : {iv({0, 0}), iv({1, 0}), iv({-2, 1}), iv({3, -3})}) {
        BoundaryPattern h = h_function(ctx.fan, diff, u);
        CHECK(same_complex(cech_complex(ctx, l0, l1, u),
                           cech_complex_for_pattern(ctx, h.positive)));
      }
    }
  }

  TEST_CASE("cover complex equals the mirror relative cochain complex") {
    ToricContext ctx = p2_ctx();
    for (auto values : {std::vector<long long>{-1, -1, -1},
                        {1, -1, -1},
                        {1, 1, -1},
                        {1, 1, 1}}) {
      BoundaryPattern p;
      p.values = iv(values);
      for (const Int& x : p.values) p.positive.push_back(x > 0);
      FreeComplex via_cover = cech_complex_for_pattern(ctx, p.positive);
      FreeComplex via_mirror = relative_cochain_complex(ctx.qb, plus_subcomplex(ctx.fp, p));
      CHECK(same_complex(via_cover, via_mirror));
      CHECK(!verify_complex(via_cover).has_value());
    }
  }

  TEST_CASE("pattern cache does not change results") {
    ToricContext ctx = p2_ctx();
    PatternCache cache;
    for (auto l1 : {sf({0, 0, 1}), sf({1, 1, 1}), sf({-1, -1, -1})}) {
      GradedHom plain = graded_hom(ctx, sf({0, 0, 0}), l1);
      GradedHom cached = graded_hom(ctx, sf({0, 0, 0}), l1, &cache);
      CHECK(plain.pieces == cached.pieces);
      CHECK(plain.certificate.size() == cached.certificate.size());
    }
    CHECK(!cache.entries.empty());
  }

  TEST_CASE("certificate chambers carry their weights") {
    ToricContext ctx = p2_ctx();
    GradedHom gh = graded_hom(ctx, sf({0, 0, 0}), sf({0, 0, 1}));
    size_t listed = 0;
    for (const ChamberInfo& ci : gh.certificate) {
      if (ci.coh.trivial()) {
        CHECK(ci.weights.empty());
        continue;
      }
      CHECK(ci.bounded);
      listed += ci.weights.size();
      for (const IntVec& u : ci.weights) {
        CHECK(h_function(ctx.fan, gh.diff, u).positive == ci.positive);
      }
    }
    CHECK(listed == gh.pieces.size());
  }

  TEST_CASE("composition concatenates compatible chains") {
    ToricContext ctx = p1_ctx();
    std::vector<bool> none{false, false};
    // face ids: 0 and 1 are the endpoints, 2 is the whole segment
    Cochain vertex{{{0}, Int(1)}};
    Cochain edge{{{0, 2}, Int(1)}};

    Cochain lead = cech_cup(ctx, vertex, none, edge, none);
    CHECK(lead == Cochain{{{0, 2}, Int(1)}});
    CHECK(cech_cup(ctx, edge, none, vertex, none).empty());

    Cochain top{{{2}, Int(1)}};
    CHECK(cech_cup(ctx, edge, none, top, none) == Cochain{{{0, 2}, Int(1)}});

    Cochain unit = cech_unit(ctx);
    CHECK(unit.size() == 3);
    CHECK(cech_cup(ctx, unit, none, edge, none) == edge);
    CHECK(cech_cup(ctx, edge, none, unit, none) == edge);
  }

  TEST_CASE("composition lands in the alive part of the target pattern") {
    ToricContext ctx = p1_ctx();
    // factor patterns (T,F) and (F,T): target pattern (T,T) kills pure-vertex
    // chains; the only degree-0 target generator is the top face
    std::vector<bool> left{true, false};
    std::vector<bool> right{false, true};
    Cochain phi{{{1}, Int(1)}, {{2}, Int(1)}};  // alive for (T,F)
    Cochain psi{{{0}, Int(1)}, {{2}, Int(1)}};  // alive for (F,T)
    Cochain prod = cech_cup(ctx, phi, left, psi, right);
    CHECK(prod == Cochain{{{2}, Int(1)}});
  }
}
