#pragma once

// Pointwise checks of the summation-by-parts representations of S - sigma,
// V - S and of the two boundary sums that make up V - S, plus the six-term
// splitting of V - S into R0..R5.
//
// Conventions shared by every right-hand side:
//  * sums over |j| = a..b visit both signs of every magnitude; magnitude 0
//    contributes the two positions 0+ and 0-;
//  * differences step away from zero (see diff() in grid.hpp);
//  * the kernel is half_kernel(), whose zero mode carries weight 1/2 on each
//    half-line. The identities close exactly with this kernel; with the plain
//    E_n (zero mode at full weight for n >= 1) they are off by terms in
//    c_{+-1,k}.

#include <functional>
#include <string>
#include <vector>

#include "fourier_l1/grid.hpp"
#include "fourier_l1/kernels.hpp"
#include "fourier_l1/sample_grid.hpp"

namespace fourier_l1 {

struct IdentityResidual {
  std::string lemma;
  double max_abs_residual = 0.0;
  double x = 0.0;  // location of the largest residual
  double y = 0.0;
  double lhs_scale = 0.0;  // max |LHS| over the samples

  double relative() const;
};

/// Magnitudes lo..hi inclusive (empty when hi < lo).
struct MagnitudeRange {
  int lo = 0;
  int hi = -1;
};

/// Accumulates terms  scale(|j|, |k|) * Delta_pq c_jk * K_j(x) K_k(y)  over
/// every signed (j, k) with |j|, |k| in the given ranges, K = half_kernel, and
/// evaluates the total on a sample grid in one pass.
class KernelSum {
 public:
  using Weight = std::function<double(int, int)>;

  KernelSum(int max_j, int max_k);

  void add(const CoefficientGrid& grid, MagnitudeRange j, MagnitudeRange k, DiffOrder order,
           const Weight& weight);

  SampleGrid evaluate(int nx, int ny) const;

 private:
  int max_j_;
  int max_k_;
  std::vector<cplx> coef_;
};

/// S_mn - sigma_mn against its representation through Cesaro means at the
/// window corners and the three weighted boundary sums.
IdentityResidual lemma21_residual(const CoefficientGrid& grid, const VPParams& params, int nx,
                                  int ny);

/// Sign placed on the third boundary sum (|j| in the window, |k| <= n) of the
/// V - S representation. Direct evaluation validates plus; the opposite sign
/// is kept to demonstrate that the check can tell them apart.
enum class ThirdTermSign { plus = 1, minus = -1 };
inline constexpr ThirdTermSign kResolvedThirdTermSign = ThirdTermSign::plus;

IdentityResidual lemma22_residual(const CoefficientGrid& grid, const VPParams& params, int nx,
                                  int ny, ThirdTermSign sign = kResolvedThirdTermSign);

/// Evaluates both signs and returns the one with the smaller relative residual.
ThirdTermSign resolve_third_term_sign(const CoefficientGrid& grid, const VPParams& params, int nx,
                                      int ny);

/// The k-boundary sum over |j| <= m, n < |k| <= lambda_n against its six-term
/// expansion in Delta_11, Delta_10, Delta_01 and kernel products.
IdentityResidual lemma23_residual(const CoefficientGrid& grid, const VPParams& params, int nx,
                                  int ny);

/// The doubly weighted corner sum against its nine-term expansion.
IdentityResidual lemma24_residual(const CoefficientGrid& grid, const VPParams& params, int nx,
                                  int ny);

struct DecompositionResult {
  std::vector<SampleGrid> components;  // R0..R5
  SampleGrid reconstructed;            // R1 + R2 - R3 - R4 + R5 - R0
  SampleGrid v_minus_s;                // V - S from the definitions
  IdentityResidual residual;
  std::vector<double> component_norms;  // L1 norms of R0..R5
  double norm_v_minus_s = 0.0;
};

DecompositionResult decompose_v_minus_s(const CoefficientGrid& grid, const VPParams& params,
                                        int nx, int ny);

/// The components alone, without the reference V - S.
std::vector<SampleGrid> r_components(const CoefficientGrid& grid, const VPParams& params, int nx,
                                     int ny);

/// Residual record with the run parameters, as written by the CLI.
struct IdentityReport {
  std::string lemma;
  int m = 0;
  int n = 0;
  double lambda = 0.0;
  int nx = 0;
  int ny = 0;
  double max_abs_residual = 0.0;
  double lhs_scale = 0.0;
  double relative_residual = 0.0;
};

IdentityReport make_report(const IdentityResidual& r, const VPParams& params, int nx, int ny);

/// All five checks (four lemmas and the decomposition) for one parameter set.
std::vector<IdentityReport> check_all_identities(const CoefficientGrid& grid,
                                                 const VPParams& params, int nx, int ny);

/// Smallest resolution per axis at which distinct trig polynomials of the
/// window's degree cannot alias: 2 * lambda_m + 3.
int minimum_resolution(int lambda_index);

}  // namespace fourier_l1
