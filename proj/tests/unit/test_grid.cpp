#include <gtest/gtest.h>

#include "fourier_l1/error.hpp"
#include "fourier_l1/grid.hpp"
#include "support.hpp"

using namespace fourier_l1;

TEST(Grid, StoredValueRoundTrip) {
  CoefficientGrid g(2, 3);
  g.set(1, 2, {3, 4});
  EXPECT_EQ(get(g, 1, 2), cplx(3, 4));
  EXPECT_EQ(get(g, g.bound_j() + 5, 0), cplx{});
  EXPECT_EQ(get(CoefficientGrid(1, 1), 0, 0), cplx{});
}

TEST(Grid, RejectsBadInput) {
  CoefficientGrid g(1, 1);
  EXPECT_THROW(g.set(2, 0, 1.0), Error);
  EXPECT_THROW(g.set(0, 0, {std::nan(""), 0}), Error);
  EXPECT_THROW(CoefficientGrid(0, 1), Error);
  EXPECT_THROW(DiffOrder(3, 0), Error);
}

TEST(Grid, SignedZeroIsTwoPositions) {
  EXPECT_NE(plus(0), minus(0));
  EXPECT_EQ(minus(0).value(), 0);
  EXPECT_EQ(minus(3).value(), -3);
  EXPECT_EQ(minus(3).outward(), minus(4));
}

TEST(Grid, DiffAnnihilatesConstants) {
  CoefficientGrid g(6, 6);
  for (int j = -6; j <= 6; ++j)
    for (int k = -6; k <= 6; ++k) g.set(j, k, 7.0);
  for (SignedIndex j : {plus(0), minus(2), plus(4)})
    for (SignedIndex k : {minus(0), plus(3), minus(4)}) EXPECT_EQ(diff(g, {1, 1}, j, k), cplx{});
}

TEST(Grid, DiffOfLinearSequence) {
  CoefficientGrid g(3, 1);
  for (int j = -3; j <= 3; ++j) g.set(j, 0, double(j));
  EXPECT_EQ(diff(g, {1, 0}, plus(1), plus(0)), cplx(-1));
  // Away from zero on the minus side: c_{-1} - c_{-2} = 1.
  EXPECT_EQ(diff(g, {1, 0}, minus(1), plus(0)), cplx(1));
  // The boundary neighbour reads as zero.
  EXPECT_EQ(diff(g, {1, 0}, plus(3), plus(0)), cplx(3));
}

TEST(Grid, DiffMatchesBinomialExpansion) {
  const auto g = testing_support::random_grid(11, 5, 5);
  const int binom[3][3] = {{1, 0, 0}, {1, -1, 0}, {1, -2, 1}};
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q)
      for (SignedIndex j : {plus(0), minus(0), plus(2), minus(3)})
        for (SignedIndex k : {plus(1), minus(0), minus(2)}) {
          cplx expect{};
          for (int a = 0; a <= p; ++a)
            for (int b = 0; b <= q; ++b)
              expect += double(binom[p][a] * binom[q][b]) * g(j.outward(a).value(), k.outward(b).value());
          EXPECT_LE(std::abs(diff(g, {p, q}, j, k) - expect), 1e-14) << p << q;
        }
}

TEST(Grid, DiffProperties) {
  const auto a = testing_support::random_grid(1, 4, 4);
  const auto b = testing_support::random_grid(2, 4, 4);
  const cplx alpha{0.3, -1.2}, beta{-0.7, 0.4};
  CoefficientGrid mix(4, 4);
  for (int j = -4; j <= 4; ++j)
    for (int k = -4; k <= 4; ++k) mix.set(j, k, alpha * a(j, k) + beta * b(j, k));
  for (int j = -4; j <= 4; ++j)
    for (int k = -4; k <= 4; ++k) {
      const SignedIndex sj = signed_index(j), sk = signed_index(k);
      EXPECT_EQ(diff(a, {0, 0}, sj, sk), a(j, k));
      if (sj.sign == Sign::plus)
        EXPECT_LE(std::abs(diff(a, {1, 0}, sj, sk) + a(j + 1, k) - a(j, k)), 1e-14 * (1 + std::abs(a(j, k))));
      const cplx lin = alpha * diff(a, {2, 1}, sj, sk) + beta * diff(b, {2, 1}, sj, sk);
      EXPECT_LE(std::abs(diff(mix, {2, 1}, sj, sk) - lin), 1e-12 * (1 + std::abs(lin)));
      // Delta_01 of the Delta_10 column equals the composed order (1, 1).
      const cplx composed = diff(a, {1, 0}, sj, sk) - diff(a, {1, 0}, sj, sk.outward());
      EXPECT_LE(std::abs(diff(a, {1, 1}, sj, sk) - composed), 1e-14 * 8);
    }
}

TEST(Grid, LoadMinimumBound) {
  const auto g = load_grid("0 0 1 0");
  EXPECT_EQ(g.bound_j(), 1);
  EXPECT_EQ(g.bound_k(), 1);
  EXPECT_EQ(g(0, 0), cplx(1));
}

TEST(Grid, LoadErrors) {
  try {
    load_grid("0 0 1 0\n0 0 2 0");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::duplicate_index);
  }
  try {
    load_grid("x y z");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
  }
  try {
    load_grid("# header\n1 2 0.5 0\n1 2.5 0 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(load_grid("  \n# only comments\n"), Error);
  EXPECT_THROW(load_grid("0 0 inf 0"), ParseError);
}

TEST(Grid, SaveLoadRoundTrip) {
  const auto g = testing_support::random_grid(5, 3, 2);
  const auto back = load_grid(save_grid(g));
  ASSERT_EQ(back.bound_j(), 3);
  ASSERT_EQ(back.bound_k(), 2);
  for (int j = -3; j <= 3; ++j)
    for (int k = -2; k <= 2; ++k) EXPECT_EQ(back(j, k), g(j, k));
}
