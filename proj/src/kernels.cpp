#include "fourier_l1/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "fourier_l1/error.hpp"
#include "fourier_l1/sample_grid.hpp"
#include "fourier_l1/simd.hpp"

namespace fourier_l1 {

double log_weight(int t) { return std::log(static_cast<double>(std::max(std::abs(t), 2))); }

int floor_lambda(double lambda, int n) {
  require(std::isfinite(lambda) && lambda >= 0.0, "lambda must be finite and non-negative");
  require(n >= 0, "index must be non-negative");
  // Floor of the correctly rounded product: a decimal lambda such as 1.15
  // gives floor(1.15 * 20) = 23, as written, not the 22 of its binary value.
  const double r = std::floor(lambda * static_cast<double>(n));
  return static_cast<int>(r);
}

int lambda_index(double lambda, int n) {
  require(std::isfinite(lambda) && lambda > 1.0, "lambda must exceed 1 (got " +
                                                     std::to_string(lambda) + ")");
  const int result = floor_lambda(lambda, n);
  if (result <= n) {
    std::ostringstream msg;
    msg << "empty de la Vallee-Poussin window: floor(" << lambda << " * " << n
        << ") = floor(" << lambda * n << ") = " << result << " does not exceed " << n;
    fail(ErrorKind::degenerate_window, msg.str());
  }
  return result;
}

VPParams::VPParams(double lambda, int m, int n)
    : lambda_(lambda),
      m_(m),
      n_(n),
      lambda_m_(lambda_index(lambda, m)),
      lambda_n_(lambda_index(lambda, n)) {}

cplx e_kernel(SignedIndex n, double x) {
  if (n.magnitude == 0) return {0.5, 0.0};
  const double arg = n.sign == Sign::plus ? x : -x;
  cplx sum{0.0, 0.0};
  for (int t = 0; t <= n.magnitude; ++t) sum += std::polar(1.0, t * arg);
  return sum;
}

cplx half_kernel(SignedIndex n, double x) {
  if (n.magnitude == 0) return {0.5, 0.0};
  return e_kernel(n, x) - 0.5;
}

namespace {

// Running E_k at every node, advanced one k at a time.
class KernelSweep {
 public:
  explicit KernelSweep(int points) : nodes_(torus_nodes(points)), values_(nodes_.size(), cplx{1.0, 0.0}) {}

  void advance(int k) {
    for (std::size_t a = 0; a < nodes_.size(); ++a) values_[a] += std::polar(1.0, k * nodes_[a]);
  }

  double l1() const {
    return simd::active_kernels().sum_abs(values_.data(), values_.size()) * 2.0 *
           std::numbers::pi / static_cast<double>(values_.size());
  }

 private:
  std::vector<double> nodes_;
  std::vector<cplx> values_;
};

}  // namespace

double e_kernel_l1_norm(int k, int points) {
  require(k >= 1, "kernel index must be at least 1");
  require(points >= 1, "quadrature needs at least one point");
  KernelSweep sweep(points);
  for (int t = 1; t <= k; ++t) sweep.advance(t);
  return sweep.l1();
}

NormBoundReport e_norm_profile(int max_k, int quadrature_points) {
  require(max_k >= 2, "norm profile needs max_k >= 2");
  require(quadrature_points >= 16 * max_k,
          "norm profile needs at least 16 * max_k quadrature points (got " +
              std::to_string(quadrature_points) + " for max_k = " + std::to_string(max_k) + ")");
  NormBoundReport report;
  report.max_k = max_k;
  report.quadrature_points = quadrature_points;
  report.entries.reserve(static_cast<std::size_t>(max_k));

  KernelSweep sweep(quadrature_points);
  for (int k = 1; k <= max_k; ++k) {
    sweep.advance(k);
    const double norm = sweep.l1();
    const double ratio = norm / log_weight(k);
    report.entries.push_back({k, norm, ratio});
    if (k >= 2 && ratio > report.estimated_c) {
      report.estimated_c = ratio;
      report.argmax_k = k;
    }
  }

  const double coarse = report.entries.back().norm;
  const double fine = e_kernel_l1_norm(max_k, 2 * quadrature_points);
  report.refinement_delta = std::abs(fine - coarse);
  if (report.refinement_delta > 1e-3 * coarse) {
    fail(ErrorKind::insufficient_resolution,
         "kernel norm at k = " + std::to_string(max_k) + " moved by " +
             std::to_string(report.refinement_delta) + " when doubling " +
             std::to_string(quadrature_points) + " quadrature points");
  }
  return report;
}

}  // namespace fourier_l1
