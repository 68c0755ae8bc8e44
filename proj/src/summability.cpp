#include "fourier_l1/summability.hpp"

#include <algorithm>
#include <cmath>

#include "fourier_l1/error.hpp"
#include "fourier_l1/synthesis.hpp"

namespace fourier_l1 {

ModeWeights partial_weights(int m) {
  require(m >= 0, "partial sum order must be non-negative");
  ModeWeights w(m);
  for (int j = -m; j <= m; ++j) w.set(j, 1.0);
  return w;
}

ModeWeights cesaro_weights(int m) {
  require(m >= 0, "Cesaro order must be non-negative");
  ModeWeights w(m);
  for (int j = -m; j <= m; ++j) w.set(j, 1.0 - std::abs(j) / (m + 1.0));
  return w;
}

ModeWeights vp_weights(int m, int lambda_m) {
  require(m >= 0 && lambda_m > m, "de la Vallee-Poussin window must be non-empty");
  ModeWeights w(lambda_m);
  for (int j = -lambda_m; j <= lambda_m; ++j) {
    const int a = std::abs(j);
    w.set(j, a <= m ? 1.0 : (lambda_m + 1.0 - a) / static_cast<double>(lambda_m - m));
  }
  return w;
}

SampleGrid synthesize(const CoefficientGrid& grid, const ModeWeights& wj, const ModeWeights& wk,
                      int nx, int ny) {
  require(nx >= 1 && ny >= 1, "sample grid resolution must be positive");
  const int bj = std::min(grid.bound_j(), wj.bound());
  const int bk = std::min(grid.bound_k(), wk.bound());
  const int cols = 2 * bk + 1;
  std::vector<cplx> coef(static_cast<std::size_t>(2 * bj + 1) * static_cast<std::size_t>(cols));
  for (int j = -bj; j <= bj; ++j) {
    for (int k = -bk; k <= bk; ++k) {
      coef[static_cast<std::size_t>(j + bj) * static_cast<std::size_t>(cols) +
           static_cast<std::size_t>(k + bk)] = wj(j) * wk(k) * grid(j, k);
    }
  }
  return contract(exponential_basis(bj, nx), coef, exponential_basis(bk, ny));
}

SampleGrid partial_sum(const CoefficientGrid& grid, int m, int n, int nx, int ny) {
  return synthesize(grid, partial_weights(m), partial_weights(n), nx, ny);
}

SampleGrid cesaro_mean(const CoefficientGrid& grid, int m, int n, int nx, int ny) {
  return synthesize(grid, cesaro_weights(m), cesaro_weights(n), nx, ny);
}

SampleGrid vp_mean(const CoefficientGrid& grid, const VPParams& params, int nx, int ny) {
  return synthesize(grid, vp_weights(params.m(), params.lambda_m()),
                    vp_weights(params.n(), params.lambda_n()), nx, ny);
}

std::vector<cplx> single_partial_sum(const TwoSidedSequence& coeffs, int n,
                                     std::span<const double> points) {
  require(n >= 0, "partial sum order must be non-negative");
  const int top = std::min(n, coeffs.bound());
  std::vector<cplx> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    cplx s{};
    for (int k = -top; k <= top; ++k) s += coeffs(k) * std::polar(1.0, k * points[i]);
    out[i] = s;
  }
  return out;
}

}  // namespace fourier_l1
