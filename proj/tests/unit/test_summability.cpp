#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "fourier_l1/summability.hpp"
#include "support.hpp"

using namespace fourier_l1;
using testing_support::max_rel_diff;
using testing_support::naive_partial;
using testing_support::random_grid;

namespace {

CoefficientGrid single(int j, int k, cplx v, int bound = 3) {
  CoefficientGrid g(bound, bound);
  g.set(j, k, v);
  return g;
}

void expect_everywhere(const SampleGrid& s, const std::function<cplx(double, double)>& f, double tol) {
  for (int a = 0; a < s.nx(); ++a)
    for (int b = 0; b < s.ny(); ++b) EXPECT_LE(std::abs(s(a, b) - f(s.x(a), s.y(b))), tol);
}

}  // namespace

TEST(Summability, ConstantMode) {
  const auto g = single(0, 0, 5.0);
  const auto five = [](double, double) { return cplx(5); };
  expect_everywhere(partial_sum(g, 2, 1, 7, 5), five, 1e-14);
  expect_everywhere(cesaro_mean(g, 3, 2, 7, 5), five, 1e-14);
  expect_everywhere(vp_mean(g, VPParams(1.5, 2, 4), 7, 5), five, 1e-14);
}

TEST(Summability, FrequencyCutoff) {
  const auto g = single(1, 0, 1.0);
  expect_everywhere(partial_sum(g, 0, 0, 8, 8), [](double, double) { return cplx{}; }, 0.0);
  expect_everywhere(partial_sum(g, 1, 0, 8, 8), [](double x, double) { return std::polar(1.0, x); }, 1e-14);
  expect_everywhere(cesaro_mean(g, 1, 0, 8, 8), [](double x, double) { return 0.5 * std::polar(1.0, x); }, 1e-14);
}

TEST(Summability, SingleTermWindow) {
  const auto g = random_grid(4, 3, 3);
  EXPECT_LE(max_rel_diff(vp_mean(g, VPParams(2.0, 1, 1), 9, 9), partial_sum(g, 2, 2, 9, 9)), 1e-14);
}

TEST(Summability, PartialSumMatchesNaiveLoop) {
  const auto g = random_grid(7, 5, 5);
  const SampleGrid s = partial_sum(g, 3, 3, 5, 5);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      const cplx expect = naive_partial(g, 3, 3, s.x(a), s.y(b));
      EXPECT_LE(std::abs(s(a, b) - expect), 1e-12 * std::max(1.0, std::abs(expect)));
    }
}

TEST(Summability, CesaroMatchesNaiveAverage) {
  const auto g = random_grid(8, 6, 6);
  const int m = 4, n = 4;
  const SampleGrid sigma = cesaro_mean(g, m, n, 6, 6);
  SampleGrid avg(6, 6);
  for (int j = 0; j <= m; ++j)
    for (int k = 0; k <= n; ++k) avg += partial_sum(g, j, k, 6, 6);
  avg *= cplx(1.0 / ((m + 1) * (n + 1)));
  EXPECT_LE(max_rel_diff(sigma, avg), 1e-12);
}

TEST(Summability, VPMatchesNaiveWindowAverage) {
  const auto g = random_grid(9, 6, 6);
  const VPParams p(1.5, 4, 4);
  SampleGrid avg(7, 7);
  for (int j = p.m() + 1; j <= p.lambda_m(); ++j)
    for (int k = p.n() + 1; k <= p.lambda_n(); ++k) avg += partial_sum(g, j, k, 7, 7);
  avg *= cplx(1.0 / ((p.lambda_m() - p.m()) * (p.lambda_n() - p.n())));
  EXPECT_LE(max_rel_diff(vp_mean(g, p, 7, 7), avg), 1e-12);
}

TEST(Summability, Nesting) {
  CoefficientGrid g(3, 2);
  const auto big = random_grid(10, 3, 2);
  for (int j = -3; j <= 3; ++j)
    for (int k = -2; k <= 2; ++k) g.set(j, k, big(j, k));
  const SampleGrid base = partial_sum(g, 3, 2, 9, 9);
  for (int m : {3, 5, 9}) EXPECT_LE(max_rel_diff(partial_sum(g, m, m + 1, 9, 9), base), 1e-12);
}

TEST(Summability, Linearity) {
  const auto a = random_grid(11, 5, 5), b = random_grid(12, 5, 5);
  const cplx alpha{0.4, 1.1}, beta{-2.0, 0.3};
  CoefficientGrid mix(5, 5);
  for (int j = -5; j <= 5; ++j)
    for (int k = -5; k <= 5; ++k) mix.set(j, k, alpha * a(j, k) + beta * b(j, k));
  const VPParams p(1.25, 4, 4);
  EXPECT_LE(max_rel_diff(partial_sum(mix, 3, 4, 8, 8), alpha * partial_sum(a, 3, 4, 8, 8) + beta * partial_sum(b, 3, 4, 8, 8)), 1e-12);
  EXPECT_LE(max_rel_diff(cesaro_mean(mix, 3, 4, 8, 8), alpha * cesaro_mean(a, 3, 4, 8, 8) + beta * cesaro_mean(b, 3, 4, 8, 8)), 1e-12);
  EXPECT_LE(max_rel_diff(vp_mean(mix, p, 8, 8), alpha * vp_mean(a, p, 8, 8) + beta * vp_mean(b, p, 8, 8)), 1e-12);
}

TEST(Summability, ConjugateSymmetricGridsGiveRealMeans) {
  auto g = random_grid(13, 6, 6);
  CoefficientGrid sym(6, 6);
  for (int j = -6; j <= 6; ++j)
    for (int k = -6; k <= 6; ++k) sym.set(j, k, 0.5 * (g(j, k) + std::conj(g(-j, -k))));
  for (const SampleGrid& s : {partial_sum(sym, 4, 3, 10, 10), cesaro_mean(sym, 4, 3, 10, 10),
                              vp_mean(sym, VPParams(1.5, 4, 4), 10, 10)}) {
    EXPECT_LE(s.max_abs_imag(), 1e-10 * s.max_abs());
  }
}

TEST(Summability, AveragingIdentity) {
  const auto g = random_grid(14, 6, 6);
  const int m = 4, n = 3, N = 9;
  SampleGrid lhs = cplx((m + 1.0) * (n + 1)) * cesaro_mean(g, m, n, N, N);
  lhs -= cplx(m * (n + 1.0)) * cesaro_mean(g, m - 1, n, N, N);
  lhs -= cplx((m + 1.0) * n) * cesaro_mean(g, m, n - 1, N, N);
  lhs += cplx(double(m * n)) * cesaro_mean(g, m - 1, n - 1, N, N);
  EXPECT_LE(max_deviation(lhs, partial_sum(g, m, n, N, N)).value, 1e-10);
}

TEST(Summability, SingleVariablePartialSum) {
  const std::vector<double> pts = torus_nodes(11);
  TwoSidedSequence c0(2);
  c0.set(0, 1.0);
  for (cplx v : single_partial_sum(c0, 3, pts)) EXPECT_EQ(v, cplx(1));

  TwoSidedSequence cosine(1);
  cosine.set(1, 0.5);
  cosine.set(-1, 0.5);
  const auto s = single_partial_sum(cosine, 1, pts);
  for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_NEAR(std::abs(s[i] - std::cos(pts[i])), 0.0, 1e-15);

  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> u(-1, 1);
  TwoSidedSequence r(7);
  for (int k = -7; k <= 7; ++k) r.set(k, {u(rng), u(rng)});
  const auto sr = single_partial_sum(r, 5, pts);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    cplx expect{};
    for (int k = -5; k <= 5; ++k) expect += r(k) * std::polar(1.0, k * pts[i]);
    EXPECT_LE(std::abs(sr[i] - expect), 1e-12 * std::max(1.0, std::abs(expect)));
  }
}
