#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "fourier_l1/grid.hpp"
#include "fourier_l1/sample_grid.hpp"

namespace testing_support {

using fourier_l1::cplx;

inline fourier_l1::CoefficientGrid random_grid(std::uint64_t seed, int bj, int bk) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  fourier_l1::CoefficientGrid g(bj, bk);
  for (int j = -bj; j <= bj; ++j)
    for (int k = -bk; k <= bk; ++k) g.set(j, k, {u(rng), u(rng)});
  return g;
}

/// sum_{|j|<=m, |k|<=n} c_jk e^{i(jx+ky)} straight from the definition.
inline cplx naive_partial(const fourier_l1::CoefficientGrid& g, int m, int n, double x, double y) {
  cplx s{};
  for (int j = -m; j <= m; ++j)
    for (int k = -n; k <= n; ++k) s += g(j, k) * std::polar(1.0, j * x + k * y);
  return s;
}

inline double max_rel_diff(const fourier_l1::SampleGrid& a, const fourier_l1::SampleGrid& b) {
  const auto d = fourier_l1::max_deviation(a, b);
  return d.value / std::max({a.max_abs(), b.max_abs(), 1e-300});
}

}  // namespace testing_support
