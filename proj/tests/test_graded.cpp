#include <random>

#include <gtest/gtest.h>

#include "support.hpp"
#include "toric/graded.hpp"

using namespace toric;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Truncated Cauchy product, the oracle for expansions: c * den == num mod t^{n+1}.
std::vector<BigInt> cauchy(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                           std::size_t n) {
  std::vector<BigInt> out(n + 1, 0);
  for (std::size_t i = 0; i <= n && i < a.size(); ++i) {
    for (std::size_t j = 0; i + j <= n && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<BigInt> padded(const Polynomial& p, std::size_t n) {
  std::vector<BigInt> out(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) out[i] = p.coeff(i);
  return out;
}

ChainComplexWindow<int> two_term_identity() {
  // 0 -> Q -> Q -> 0 in degrees 0..3
  std::vector<std::vector<int>> bases = {{}, {1}, {2}, {}};
  std::vector<SparseMatrix> links = {SparseMatrix(0, 1), SparseMatrix::identity(1),
                                     SparseMatrix(1, 0)};
  return {Direction::homological, 0, bases, links};
}

}  // namespace

TEST(HomologyDims, TwoTermIdentity) {
  auto h = homology_dims(two_term_identity());
  EXPECT_EQ(h.at(1), 0u);
  EXPECT_EQ(h.at(2), 0u);
  EXPECT_EQ(h.size(), 2u);
}

TEST(HomologyDims, ZeroDifferentials) {
  std::vector<std::vector<int>> bases = {{}, {1, 2}, {3, 4, 5}, {}};
  std::vector<SparseMatrix> links = {SparseMatrix(2, 0), SparseMatrix(3, 2),
                                     SparseMatrix(0, 3)};
  ChainComplexWindow<int> w(Direction::cohomological, 0, bases, links);
  auto h = homology_dims(w);
  EXPECT_EQ(h.at(1), 2u);
  EXPECT_EQ(h.at(2), 3u);
  auto reps = homology_representatives(w, 2);
  EXPECT_EQ(reps.size(), 3u);
}

TEST(HomologyDims, RejectsNarrowWindow) {
  std::vector<std::vector<int>> bases = {{1}, {2}};
  ChainComplexWindow<int> w(Direction::homological, 0, bases, {SparseMatrix::identity(1)});
  EXPECT_THROW(homology_dims(w), WindowError);
  EXPECT_THROW(homology_representatives(w, 0), WindowError);
}

TEST(HomologyDims, RejectsShapeMismatch) {
  std::vector<std::vector<int>> bases = {{1}, {2, 3}};
  EXPECT_THROW(ChainComplexWindow<int>(Direction::homological, 0, bases,
                                       {SparseMatrix::identity(1)}),
               WindowError);
}

TEST(HomologyRepresentatives, ExactComplexHasNone) {
  EXPECT_TRUE(homology_representatives(two_term_identity(), 1).empty());
}

TEST(HomologyRepresentatives, CyclesIndependentModBoundaries) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> val(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    // C_2 -(d2)-> C_1 -(d1)-> C_0 with d1 d2 = 0: choose d2 as kernel vectors of d1.
    SparseMatrix d1(3, 5);
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 5; ++c) d1.add(r, c, val(rng));
    }
    auto ker = kernel_basis(d1);
    SparseMatrix d2(5, ker.size());
    for (std::size_t j = 0; j < ker.size(); ++j) {
      if (j % 2 == 1) continue;  // leave some cycles unbounded
      for (const auto& [i, v] : ker[j]) d2.add(i, j, v);
    }
    std::vector<std::vector<int>> bases = {{}, {0, 1, 2}, {0, 1, 2, 3, 4},
                                           std::vector<int>(ker.size(), 0), {}};
    std::vector<SparseMatrix> links = {SparseMatrix(0, 3), d1, d2, SparseMatrix(ker.size(), 0)};
    ChainComplexWindow<int> w(Direction::homological, -1, bases, links);
    EXPECT_EQ(w.d_squared_nonzeros(), 0u);
    auto reps = homology_representatives(w, 1);
    EXPECT_EQ(reps.size(), homology_dim(w, 1));
    Echelon span(5);
    for (std::size_t c = 0; c < d2.cols(); ++c) span.insert(d2.column(c));
    for (const auto& r : reps) {
      EXPECT_TRUE(d1.apply(r).empty());
      EXPECT_TRUE(span.insert(r));
    }
  }
}

TEST(SeriesExpand, Geometric) {
  PoincareSeries s(Polynomial{1}, Polynomial{1, -1});
  EXPECT_EQ(series_expand(s, 3), ints({1, 1, 1, 1}));
}

TEST(SeriesExpand, SimplexBoundaryLoopSeries) {
  PoincareSeries s(Polynomial{1, 1}.pow(3), Polynomial{1, 0, 0, 0, -1});
  auto c = series_expand(s, 8);
  EXPECT_EQ(c, ints({1, 3, 3, 1, 1, 3, 3, 1, 1}));
  EXPECT_EQ(cauchy(c, padded(s.denominator(), 8), 8), padded(s.numerator(), 8));
}

TEST(SeriesExpand, SquareLoopSeries) {
  PoincareSeries s(Polynomial{1, 1}.pow(2), Polynomial{1, -1}.pow(2));
  auto c = series_expand(s, 5);
  EXPECT_EQ(c, ints({1, 4, 8, 12, 16, 20}));
  EXPECT_EQ(cauchy(c, padded(s.denominator(), 5), 5), padded(s.numerator(), 5));
}

TEST(SeriesExpand, RejectsBadDenominator) {
  EXPECT_THROW(series_expand(Polynomial{1}, Polynomial{0, 1}, 3), SeriesError);
  EXPECT_THROW(PoincareSeries(Polynomial{1}, Polynomial{}), SeriesError);
}

TEST(SeriesArithmetic, Identities) {
  PoincareSeries s(Polynomial{1, 1, 1}, Polynomial{1, -1}.pow(2));
  EXPECT_EQ(series_mul(s, PoincareSeries()), s);
  PoincareSeries geo(Polynomial{1}, Polynomial{1, -1});
  EXPECT_EQ(series_mul(geo, PoincareSeries(Polynomial{1, -1})), PoincareSeries());
  EXPECT_EQ(series_div(s, s), PoincareSeries());
  EXPECT_THROW(series_div(s, PoincareSeries(Polynomial{})), SeriesError);
}

TEST(SeriesArithmetic, LowestTerms) {
  // (1 - t^2) / (1 - t)^2 reduces to (1 + t) / (1 - t)
  PoincareSeries s(Polynomial{1, 0, -1}, Polynomial{1, -1}.pow(2));
  EXPECT_EQ(s.numerator(), (Polynomial{1, 1}));
  EXPECT_EQ(s.denominator(), (Polynomial{1, -1}));
  EXPECT_EQ(s.to_string(), "(1 + t)/(1 - t)");
}

TEST(SeriesArithmetic, ProductExpansionIsCauchyProduct) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_poly = [&](bool unit_constant) {
    std::vector<BigInt> c;
    for (int i = 0; i < 4; ++i) c.emplace_back(coef(rng));
    if (unit_constant) c[0] = (coef(rng) >= 0) ? 1 : -1;
    return Polynomial(c);
  };
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial n1 = random_poly(false), n2 = random_poly(false);
    if (n1.is_zero() || n2.is_zero()) continue;
    PoincareSeries a(n1, random_poly(true));
    PoincareSeries b(n2, random_poly(true));
    const std::size_t n = 12;
    EXPECT_EQ(series_expand(series_mul(a, b), n),
              cauchy(series_expand(a, n), series_expand(b, n), n));
  }
}
