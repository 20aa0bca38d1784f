#include "doctest.h"
#include "tmc/lattice.hpp"
#include "tmc/simp.hpp"

#include <vector>

using namespace tmc;

namespace {

IntVec iv(std::vector<long long> v) {
  IntVec out;
  for (long long x : v) out.emplace_back(x);
  return out;
}

Fan p2_fan() {
  Fan f;
  f.dim = 2;
  f.rays = {iv({1, 0}), iv({0, 1}), iv({-1, -1})};
  f.max_cones = {{0, 1}, {1, 2}, {2, 0}};
  return f;
}

FacePoset p2_poset() {
  SupportFunction psi;
  psi.values = iv({1, 1, 1});
  return face_poset(polytope_from_support(p2_fan(), psi));
}

BoundaryPattern pattern(std::vector<long long> values) {
  BoundaryPattern p;
  p.values = iv(values);
  for (const Int& x : p.values) p.positive.push_back(x > 0);
  return p;
}

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

TEST_SUITE("simp") {
  TEST_CASE("full simplex enumeration") {
    OrderedComplex oc = full_simplex(2);
    CHECK(oc.n_vertices == 3);
    CHECK(oc.top_dim() == 2);
    REQUIRE(oc.simplices.size() == 3);
    CHECK(oc.simplices[0].size() == 3);
    CHECK(oc.simplices[1].size() == 3);
    CHECK(oc.simplices[2].size() == 1);
    CHECK(oc.has_simplex({0, 2}));
    CHECK(!oc.has_simplex({2, 0}));  // keys are strictly increasing lists
    CHECK(oc.index_of(1, {0, 1}) == 0);
    CHECK(oc.index_of(1, {1, 2}) == 2);
    CHECK(oc.index_of(2, {0, 1, 2}) == 0);
    CHECK(oc.index_of(1, {0, 3}) == -1);
  }

  TEST_CASE("barycentric subdivision of the triangle poset") {
    FacePoset fp = p2_poset();
    OrderedComplex oc = barycentric(fp);
    CHECK(oc.n_vertices == 7);
    REQUIRE(oc.simplices.size() == 3);
    CHECK(oc.simplices[0].size() == 7);
    // nested pairs: vertex<edge twice per edge, plus everything under the top
    CHECK(oc.simplices[1].size() == 12);
    CHECK(oc.simplices[2].size() == 6);  // vertex < edge < top chains
    // chains are simplices, incomparable pairs are not
    CHECK(oc.has_simplex({0, fp.top_id}));
    CHECK(!oc.has_simplex({3, 4}));  // two distinct edges
    CHECK(!oc.has_simplex({0, 1}));  // two distinct vertices
  }

  TEST_CASE("relative complex with nothing killed is a contractible ball") {
    OrderedComplex oc = barycentric(p2_poset());
    PlusSubcomplex none = full_subcomplex(oc.n_vertices, {});
    FreeComplex c = relative_cochain_complex(oc, none);
    CHECK(!verify_complex(c).has_value());
    CohomologyResult h = cohomology(c);
    CHECK(h.rank(0) == 1);
    CHECK(h.rank(1) == 0);
    CHECK(h.rank(2) == 0);
    REQUIRE(h.at(0) != nullptr);
    CHECK(h.at(0)->torsion.empty());
    CHECK(h.euler() == 1);
  }

  TEST_CASE("killing the whole boundary leaves top cohomology") {
    FacePoset fp = p2_poset();
    OrderedComplex oc = barycentric(fp);
    PlusSubcomplex all = plus_subcomplex(fp, pattern({1, 1, 1}));
    // every proper face is outward, the top face never is
    for (int i = 0; i < 7; ++i) CHECK(all.vertex_member[i] == (i != fp.top_id));
    FreeComplex c = relative_cochain_complex(oc, all);
    CHECK(c.rank_at(0) == 1);
    CHECK(c.rank_at(1) == 6);
    CHECK(c.rank_at(2) == 6);
    CohomologyResult h = cohomology(c);
    CHECK(h.rank(0) == 0);
    CHECK(h.rank(1) == 0);
    CHECK(h.rank(2) == 1);
    REQUIRE(h.at(2) != nullptr);
    CHECK(h.at(2)->torsion.empty());
  }

  TEST_CASE("killing a contractible boundary arc kills all cohomology") {
    FacePoset fp = p2_poset();
    OrderedComplex oc = barycentric(fp);
    for (auto values : {std::vector<long long>{1, -1, -1}, {1, 1, -1}}) {
      PlusSubcomplex a = plus_subcomplex(fp, pattern(values));
      CohomologyResult h = cohomology(relative_cochain_complex(oc, a));
      CHECK(h.trivial());
    }
  }

  TEST_CASE("dual-cell complex reproduces the relative cochain complex") {
    FacePoset fp = p2_poset();
    OrderedComplex oc = barycentric(fp);
    for (auto values : {std::vector<long long>{-1, -1, -1},
                        {1, -1, -1},
                        {1, 1, -1},
                        {1, 1, 1}}) {
      PlusSubcomplex a = plus_subcomplex(fp, pattern(values));
      FreeComplex via_cells = cell_complex(oc, a);
      FreeComplex via_cochains = relative_cochain_complex(oc, a);
      CHECK(same_complex(via_cells, via_cochains));
      CHECK(!verify_complex(via_cells).has_value());
    }
  }

  TEST_CASE("front-face back-face cup product on the interval") {
    OrderedComplex oc = full_simplex(1);
    PlusSubcomplex none = full_subcomplex(oc.n_vertices, {});
    Cochain d0{{{0}, Int(1)}};
    Cochain d1{{{1}, Int(1)}};
    Cochain de{{{0, 1}, Int(1)}};

    Cochain expect_edge{{{0, 1}, Int(1)}};
    CHECK(simp_cup(oc, d0, de, none) == expect_edge);
    CHECK(simp_cup(oc, de, d0, none).empty());
    CHECK(simp_cup(oc, de, d1, none) == expect_edge);

    // the constant vertex cochain is a two-sided unit
    Cochain unit{{{0}, Int(1)}, {{1}, Int(1)}};
    CHECK(simp_cup(oc, unit, de, none) == de);
    CHECK(simp_cup(oc, de, unit, none) == de);
    CHECK(simp_cup(oc, unit, unit, none) == unit);
  }

  TEST_CASE("cup product respects the killed subcomplex") {
    OrderedComplex oc = full_simplex(1);
    PlusSubcomplex everything = full_subcomplex(oc.n_vertices, {0, 1});
    Cochain d0{{{0}, Int(1)}};
    Cochain de{{{0, 1}, Int(1)}};
    CHECK(simp_cup(oc, d0, de, everything).empty());

    // killing only vertex 1 keeps the edge alive
    PlusSubcomplex v1 = full_subcomplex(oc.n_vertices, {1});
    CHECK(simp_cup(oc, d0, de, v1) == Cochain{{{0, 1}, Int(1)}});
  }

  TEST_CASE("intersect-and-collapse trichotomy on the triangle") {
    OrderedComplex oc = full_simplex(2);

    PiResult r1 = pi_intersect_collapse(oc, {0}, {0, 1, 2});
    CHECK(r1.tag == PiTag::same_dimension);
    CHECK(r1.target == std::vector<int>{0, 1, 2});

    PiResult r2 = pi_intersect_collapse(oc, {0, 1}, {1, 2});
    CHECK(r2.tag == PiTag::same_dimension);
    CHECK(r2.target == std::vector<int>{0, 1, 2});

    PiResult r3 = pi_intersect_collapse(oc, {0, 1}, {0, 2});
    CHECK(r3.tag == PiTag::empty);

    PiResult r4 = pi_intersect_collapse(oc, {0}, {1, 2});
    CHECK(r4.tag == PiTag::collapsed);

    CHECK_THROWS_AS(pi_intersect_collapse(oc, {}, {0}), std::invalid_argument);
  }

  TEST_CASE("trichotomy is exhaustive and matches exact geometry") {
    for (int d = 0; d <= 3; ++d) {
      OrderedComplex oc = full_simplex(d);
      std::vector<std::vector<int>> faces;
      for (const auto& dim_list : oc.simplices)
        for (const auto& s : dim_list) faces.push_back(s);
      for (const auto& sigma : faces) {
        for (const auto& tau : faces) {
          PiResult pr = pi_intersect_collapse(oc, sigma, tau);
          if (pr.tag == PiTag::same_dimension) {
            CHECK(sigma.back() == tau.front());
            CHECK(oc.has_simplex(pr.target));
          }
          if (pr.tag == PiTag::collapsed) CHECK(sigma.back() < tau.front());
          if (d <= 2) {
            // any positive shift below 1/(d+1) gives the same answer
            CHECK(pi_cells_intersect_geometric(d, sigma, tau, Rat(1, 3)) ==
                  (pr.tag != PiTag::empty));
            CHECK(pi_cells_intersect_geometric(d, sigma, tau, Rat(1, 5)) ==
                  (pr.tag != PiTag::empty));
          }
        }
      }
    }
  }

  TEST_CASE("chain-level intersection product agrees with the cup product") {
    for (int d = 0; d <= 3; ++d) {
      OrderedComplex oc = full_simplex(d);
      PlusSubcomplex none = full_subcomplex(oc.n_vertices, {});
      std::vector<std::vector<int>> faces;
      for (const auto& dim_list : oc.simplices)
        for (const auto& s : dim_list) faces.push_back(s);
      for (const auto& sigma : faces) {
        for (const auto& tau : faces) {
          Cochain a{{sigma, Int(1)}};
          Cochain b{{tau, Int(1)}};
          Cochain via_cells = cell_to_simp(cell_intersection_product(oc, a, b));
          Cochain via_cup = simp_cup(oc, a, b, none);
          CHECK(via_cells == via_cup);
        }
      }
    }
  }

  TEST_CASE("coefficient vectors round trip and drop foreign keys") {
    FacePoset fp = p2_poset();
    OrderedComplex oc = barycentric(fp);
    PlusSubcomplex a = plus_subcomplex(fp, pattern({1, -1, -1}));
    auto alive = alive_simplices(oc, a);
    REQUIRE(alive.size() >= 2);
    const auto& basis1 = alive[1];
    REQUIRE(basis1.size() >= 2);

    Cochain c{{basis1[0], Int(3)}, {basis1[1], Int(-2)}};
    IntVec v = cochain_to_vector(c, basis1);
    CHECK(v[0] == 3);
    CHECK(v[1] == -2);
    CHECK(vector_to_cochain(v, basis1) == c);

    // a key outside the basis is silently ignored
    Cochain foreign = c;
    foreign[{998, 999}] = 5;
    CHECK(cochain_to_vector(foreign, basis1) == v);

    CHECK_THROWS_AS(vector_to_cochain(IntVec(basis1.size() + 1, 0), basis1),
                    std::invalid_argument);
  }
}
