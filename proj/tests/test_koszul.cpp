#include <random>

#include <gtest/gtest.h>

#include "support.hpp"
#include "toric/koszul.hpp"

using namespace toric;

namespace {

Monomial mono(std::vector<int> e) { return Monomial{std::move(e)}; }

std::map<int, std::size_t> dims(std::initializer_list<std::pair<const int, std::size_t>> xs) {
  return std::map<int, std::size_t>(xs);
}

Monomial multidegree(const KoszulBasisElement& e) {
  Monomial b = e.a;
  for (int v : e.sigma) ++b.exponents[static_cast<std::size_t>(v - 1)];
  return b;
}

std::map<int, std::size_t> restrict_to(const std::map<int, std::size_t>& m, int max_degree) {
  std::map<int, std::size_t> out;
  for (const auto& [d, n] : m) {
    if (d <= max_degree && n) out[d] = n;
  }
  return out;
}

}  // namespace

TEST(KoszulDifferential, Examples) {
  auto tri = SimplicialComplex::simplex_boundary(3);
  auto d1 = koszul_differential(tri, {{1}, mono({0, 0, 0})});
  ASSERT_EQ(d1.size(), 1u);
  EXPECT_EQ(d1.begin()->first, (KoszulBasisElement{{}, mono({1, 0, 0})}));
  EXPECT_EQ(d1.begin()->second, 1);

  EXPECT_TRUE(koszul_differential(tri, {{}, mono({2, 1, 0})}).empty());

  LinearCombination<KoszulBasisElement> want = {{{{2}, mono({1, 0, 0})}, 1},
                                                {{{1}, mono({0, 1, 0})}, -1}};
  EXPECT_EQ(koszul_differential(tri, {{1, 2}, mono({0, 0, 0})}), want);
  EXPECT_EQ(koszul_differential(SimplicialComplex::discrete(3), {{1, 2}, mono({0, 0, 0})}), want);

  // v_1 v_2 is zero in the discrete complex, so the cross term drops.
  auto cross = koszul_differential(SimplicialComplex::discrete(3), {{1, 2}, mono({1, 0, 0})});
  ASSERT_EQ(cross.size(), 1u);
  EXPECT_EQ(cross.begin()->first, (KoszulBasisElement{{2}, mono({2, 0, 0})}));

  EXPECT_THROW(koszul_differential(tri, {{}, mono({1, 1, 1})}), std::invalid_argument);
  EXPECT_THROW(koszul_differential(tri, {{2, 1}, mono({0, 0, 0})}), std::invalid_argument);
}

TEST(ReducedDifferential, Examples) {
  auto k = SimplicialComplex::from_facets(2, {{1}});  // vertex 2 is a ghost
  auto d = reduced_differential(k, {{1}, {}});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.begin()->first, (ReducedBasisElement{{}, {1}}));
  EXPECT_TRUE(reduced_differential(k, {{2}, {}}).empty());
  EXPECT_TRUE(reduced_differential(k, {{}, {1}}).empty());
  EXPECT_THROW(reduced_differential(k, {{1}, {1}}), std::invalid_argument);
  EXPECT_THROW(reduced_differential(k, {{}, {2}}), std::invalid_argument);
}

TEST(ReducedDifferential, SquareSquaresToZero) {
  auto w = reduced_koszul_window(SimplicialComplex::polygon(4));
  EXPECT_EQ(w.d_squared_nonzeros(), 0u);
}

TEST(KoszulModels, DSquaredZeroOnRandomComplexes) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    auto k = toric::testing::random_complex(rng, 1 + trial % 6);
    EXPECT_EQ(reduced_koszul_window(k).d_squared_nonzeros(), 0u);
    EXPECT_EQ(full_koszul_window(k, 7).d_squared_nonzeros(), 0u);
  }
}

TEST(KoszulModels, FullDifferentialPreservesMultidegree) {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 15; ++trial) {
    auto k = toric::testing::random_complex(rng, 1 + trial % 5);
    auto w = full_koszul_window(k, 6);
    for (int deg = 0; deg <= 6; ++deg) {
      for (const auto& e : w.basis(deg)) {
        for (const auto& [term, coeff] : koszul_differential(k, e)) {
          EXPECT_EQ(multidegree(term), multidegree(e));
          EXPECT_EQ(term.degree(), e.degree() + 1);
        }
      }
    }
  }
}

TEST(ZkBetti, Simplex) {
  for (int m = 1; m <= 4; ++m) {
    EXPECT_EQ(zk_betti(SimplicialComplex::simplex(m)).total, dims({{0, 1}}));
  }
}

TEST(ZkBetti, DiscreteThreePoints) {
  auto b = zk_betti(SimplicialComplex::discrete(3));
  EXPECT_EQ(b.total, dims({{0, 1}, {3, 3}, {4, 2}}));
  std::map<std::pair<int, int>, std::size_t> bigraded = {
      {{0, 0}, 1}, {{-1, 4}, 3}, {{-2, 6}, 2}};
  EXPECT_EQ(b.bigraded, bigraded);
}

TEST(ZkBetti, Square) {
  EXPECT_EQ(zk_betti(SimplicialComplex::polygon(4)).total, dims({{0, 1}, {3, 2}, {6, 1}}));
}

TEST(ZkBetti, GhostVertexAddsCircleFactor) {
  auto k = SimplicialComplex::from_facets(2, {{1}});
  EXPECT_EQ(zk_betti(k).total, dims({{0, 1}, {1, 1}}));
}

TEST(ZkBetti, ThreadCountDoesNotChangeResult) {
  auto k = SimplicialComplex::polygon(5);
  auto a = zk_betti(k, 1);
  auto b = zk_betti(k, 4);
  EXPECT_EQ(a.total, b.total);
  EXPECT_EQ(a.bigraded, b.bigraded);
}

TEST(FullModel, Examples) {
  EXPECT_EQ(zk_betti_via_full_model(SimplicialComplex::discrete(3), 5),
            dims({{0, 1}, {3, 3}, {4, 2}}));
  EXPECT_EQ(zk_betti_via_full_model(SimplicialComplex::simplex_boundary(3), 8),
            dims({{0, 1}, {5, 1}}));
  EXPECT_EQ(zk_betti_via_full_model(SimplicialComplex::simplex(1), 4), dims({{0, 1}}));
  EXPECT_THROW(zk_betti_via_full_model(SimplicialComplex::simplex(1), 1), std::invalid_argument);
}

TEST(FullModel, AgreesWithReducedModel) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    auto k = toric::testing::random_complex(rng, 1 + trial % 5);
    const int top = k.vertex_count() + k.dimension() + 1;
    const int cutoff = std::max(2, top);
    auto full = zk_betti_via_full_model(k, cutoff, 2);
    EXPECT_EQ(restrict_to(zk_betti(k).total, cutoff), full);
  }
}

TEST(ZkBetti, StructuralProperties) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    auto k = toric::testing::random_complex(rng, 1 + trial % 6);
    auto betti = zk_betti(k).total;
    EXPECT_EQ(betti.at(0), 1u);
    // Euler characteristic of the reduced model equals that of its homology.
    auto w = reduced_koszul_window(k);
    long chain_euler = 0, homology_euler = 0;
    for (int d = 0; d < w.highest(); ++d) {
      long n = static_cast<long>(w.basis(d).size());
      chain_euler += d % 2 == 0 ? n : -n;
    }
    for (const auto& [d, n] : betti) homology_euler += d % 2 == 0 ? long(n) : -long(n);
    EXPECT_EQ(chain_euler, homology_euler);
    // The whole-window homology agrees with the block decomposition.
    EXPECT_EQ(restrict_to(homology_dims(w), 1000), betti);
  }
}

TEST(ZkBetti, PolygonsAreManifolds) {
  for (int m : {4, 5}) {
    auto betti = zk_betti(SimplicialComplex::polygon(m)).total;
    EXPECT_EQ(betti.rbegin()->first, m + 2);
    EXPECT_EQ(betti.rbegin()->second, 1u);
  }
  // pentagon: connected sum of 5 copies of S^3 x S^4
  EXPECT_EQ(zk_betti(SimplicialComplex::polygon(5)).total,
            dims({{0, 1}, {3, 5}, {4, 5}, {7, 1}}));
}
