#pragma once

#include <vector>

#include "fourier_l1/grid.hpp"

namespace fourier_l1 {

/// log(max(|t|, 2)): the strictly positive stand-in for log|t| used by the
/// kernel norm bound and by every condition sum.
double log_weight(int t);

/// floor(lambda * n) of the rounded double product.
int floor_lambda(double lambda, int n);

/// floor(lambda * n); throws degenerate_window when the result does not
/// exceed n (the de la Vallee-Poussin window would be empty).
int lambda_index(double lambda, int n);

/// lambda > 1 together with the window ends lambda_m = [lambda m] and
/// lambda_n = [lambda n]; construction fails on an empty window.
class VPParams {
 public:
  VPParams(double lambda, int m, int n);

  double lambda() const { return lambda_; }
  int m() const { return m_; }
  int n() const { return n_; }
  int lambda_m() const { return lambda_m_; }
  int lambda_n() const { return lambda_n_; }

 private:
  double lambda_;
  int m_;
  int n_;
  int lambda_m_;
  int lambda_n_;
};

/// E_{0+} = E_{0-} = 1/2, E_n(x) = sum_{t=0}^{n} e^{itx}, E_{-n}(x) = E_n(-x).
cplx e_kernel(SignedIndex n, double x);

/// The kernel the summation-by-parts identities are written in: the zero
/// mode carries weight 1/2 on each half-line, so for |n| >= 1 it is
/// E_n(x) - 1/2, and it agrees with e_kernel at magnitude 0. With this choice
/// half_kernel(+n) + half_kernel(-n) is the Dirichlet kernel D_n.
cplx half_kernel(SignedIndex n, double x);

struct NormBoundEntry {
  int k = 0;
  double norm = 0.0;   // ||E_k||_1 on [-pi, pi)
  double ratio = 0.0;  // norm / log(max(k, 2))
};

struct NormBoundReport {
  int max_k = 0;
  int quadrature_points = 0;
  std::vector<NormBoundEntry> entries;  // k = 1..max_k
  double estimated_c = 0.0;             // max ratio over 2 <= k <= max_k
  int argmax_k = 0;
  double refinement_delta = 0.0;  // |norm(max_k) at 2Q - norm(max_k) at Q|
};

/// Rectangle-rule L1 norm of E_k with `points` uniform nodes.
double e_kernel_l1_norm(int k, int points);

/// Requires max_k >= 2 and quadrature_points >= 16 * max_k. Fails with
/// insufficient_resolution if doubling the resolution moves ||E_max_k||_1 by
/// more than 1e-3 relative.
NormBoundReport e_norm_profile(int max_k, int quadrature_points);

}  // namespace fourier_l1
