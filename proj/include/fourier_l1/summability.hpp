#pragma once

// Rectangular partial sums, Cesaro means and de la Vallee-Poussin means of a
// coefficient grid. Each mean is a per-mode weight w_j * w_k applied to c_jk
// followed by one synthesis pass.

#include <span>
#include <vector>

#include "fourier_l1/grid.hpp"
#include "fourier_l1/kernels.hpp"
#include "fourier_l1/sample_grid.hpp"
#include "fourier_l1/sequence.hpp"

namespace fourier_l1 {

/// w(j) for |j| <= bound, zero outside.
class ModeWeights {
 public:
  explicit ModeWeights(int bound) : bound_(bound), w_(static_cast<std::size_t>(2 * bound + 1), 0.0) {}

  int bound() const { return bound_; }
  double operator()(int j) const {
    return (j < -bound_ || j > bound_) ? 0.0 : w_[static_cast<std::size_t>(j + bound_)];
  }
  void set(int j, double value) { w_[static_cast<std::size_t>(j + bound_)] = value; }

 private:
  int bound_;
  std::vector<double> w_;
};

/// 1 for |j| <= m.
ModeWeights partial_weights(int m);
/// 1 - |j| / (m + 1) for |j| <= m: the count of partial sums S_0..S_m that
/// contain mode j, divided by m + 1.
ModeWeights cesaro_weights(int m);
/// 1 for |j| <= m, (lambda_m + 1 - |j|) / (lambda_m - m) for m < |j| <= lambda_m.
ModeWeights vp_weights(int m, int lambda_m);

/// sum_jk wj(j) wk(k) c_jk e^{i(jx + ky)} on an nx x ny grid.
SampleGrid synthesize(const CoefficientGrid& grid, const ModeWeights& wj, const ModeWeights& wk,
                      int nx, int ny);

SampleGrid partial_sum(const CoefficientGrid& grid, int m, int n, int nx, int ny);
SampleGrid cesaro_mean(const CoefficientGrid& grid, int m, int n, int nx, int ny);
SampleGrid vp_mean(const CoefficientGrid& grid, const VPParams& params, int nx, int ny);

/// S_n(x) = sum_{|k| <= n} c_k e^{ikx} at each point.
std::vector<cplx> single_partial_sum(const TwoSidedSequence& coeffs, int n,
                                     std::span<const double> points);

}  // namespace fourier_l1
