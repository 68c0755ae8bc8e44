#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <vector>

#include "fourier_l1/norms.hpp"
#include "fourier_l1/parallel.hpp"
#include "fourier_l1/simd.hpp"
#include "fourier_l1/summability.hpp"
#include "support.hpp"

using namespace fourier_l1;

namespace {

std::vector<cplx> random_vector(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-3, 3);
  std::vector<cplx> v(n);
  for (auto& z : v) z = {u(rng), u(rng)};
  return v;
}

std::vector<const simd::KernelTable*> variants() {
  std::vector<const simd::KernelTable*> out;
  if (auto* t = simd::avx2_kernels()) out.push_back(t);
  if (auto* t = simd::neon_kernels()) out.push_back(t);
  return out;
}

}  // namespace

TEST(Simd, ScalarReference) {
  const auto& s = simd::scalar_kernels();
  std::vector<cplx> x{{1, 2}, {-3, 0.5}}, y{{0, 0}, {1, 1}};
  s.caxpy({0, 1}, x.data(), y.data(), 2);
  EXPECT_EQ(y[0], cplx(-2, 1));
  EXPECT_EQ(y[1], cplx(0.5, -2));
  EXPECT_DOUBLE_EQ(s.sum_abs(x.data(), 1), std::sqrt(5.0));
  EXPECT_DOUBLE_EQ(s.sum_abs_diff(x.data(), x.data(), 2), 0.0);
}

TEST(Simd, VariantsMatchScalar) {
  const auto& ref = simd::scalar_kernels();
  for (const simd::KernelTable* t : variants()) {
    for (std::size_t n : {0u, 1u, 2u, 3u, 5u, 8u, 17u, 64u, 1001u}) {
      const auto x = random_vector(n, n), b = random_vector(n + 100, n);
      auto y1 = random_vector(n + 200, n), y2 = y1;
      const cplx alpha{0.37, -1.9};
      ref.caxpy(alpha, x.data(), y1.data(), n);
      t->caxpy(alpha, x.data(), y2.data(), n);
      for (std::size_t i = 0; i < n; ++i) EXPECT_LE(std::abs(y1[i] - y2[i]), 1e-14 * (1 + std::abs(y1[i]))) << t->name;
      const double s1 = ref.sum_abs(x.data(), n), s2 = t->sum_abs(x.data(), n);
      EXPECT_NEAR(s1, s2, 1e-13 * (1 + s1)) << t->name;
      const double d1 = ref.sum_abs_diff(x.data(), b.data(), n), d2 = t->sum_abs_diff(x.data(), b.data(), n);
      EXPECT_NEAR(d1, d2, 1e-13 * (1 + d1)) << t->name;
    }
  }
}

TEST(Simd, DispatchHonoursOverride) {
  const std::string name(simd::active_kernels().name);
  if (const char* env = std::getenv("FOURIER_L1_SIMD"); env && std::string(env) == "scalar") {
    EXPECT_EQ(name, "scalar");
  } else if (!variants().empty()) {
    EXPECT_EQ(name, variants().front()->name);
  }
}

TEST(Parallel, ChunksCoverTheRangeOnce) {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) ++hits[i];
  });
  for (int h : hits) EXPECT_EQ(h, 1);
  parallel_for(0, [](std::size_t, std::size_t) { FAIL(); });
  EXPECT_THROW(parallel_for(10, [](std::size_t, std::size_t) { throw std::runtime_error("x"); }), std::runtime_error);
  EXPECT_GE(worker_count(), 1u);
}

TEST(Synthesis, NormIndependentOfThreadCount) {
  const auto g = testing_support::random_grid(3, 12, 12);
  const double base = l1_norm(partial_sum(g, 12, 12, 101, 67));
  setenv("FOURIER_L1_THREADS", "1", 1);
  const double single = l1_norm(partial_sum(g, 12, 12, 101, 67));
  unsetenv("FOURIER_L1_THREADS");
  EXPECT_EQ(base, single);
}
