#pragma once

// Quadrature refinement and the convergence experiments: norms of S - f,
// sigma - f, V - f and V - S along a ladder of (m, n), and the L1 norms of
// the six components of V - S.

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fourier_l1/families.hpp"
#include "fourier_l1/norms.hpp"

namespace fourier_l1 {

struct RefineResult {
  double value = 0.0;
  int n = 0;             // resolution of `value`
  double delta = 0.0;    // |value(n) - value(n / 2)|
  bool converged = false;
};

/// Evaluates norm_at(N), then doubles N until two successive values differ
/// by less than tol. The first doubling always happens; later ones stop once
/// the next resolution would exceed max_n.
RefineResult refine(const std::function<double(int)>& norm_at, int start_n, double tol,
                    int max_n);

/// Throws no_convergence for a result that did not meet its tolerance.
void require_converged(const RefineResult& result, double tol);

/// max(64, 2 * max_frequency + 3).
int default_start_resolution(int max_frequency);

struct ExperimentRecord {
  int m = 0;
  int n = 0;
  double lambda = 0.0;
  double norm_sf = 0.0;
  double norm_sigma_f = 0.0;
  double norm_vf = 0.0;
  double norm_vs = 0.0;
  int quad_n = 0;
  double refinement_delta = 0.0;  // doubling delta of norm_sf
  bool converged = false;
};

struct RunOptions {
  double tol = 1e-7;
  int max_n = 4096;
  int start_n = 0;  // 0 = default_start_resolution
};

/// One record per (m, n), sorted by min(m, n) (stable). The reference f is
/// the family's closed form when it has one, otherwise its certified
/// truncation at accuracy tol / 10. Every record is checked against
/// ||V - f|| <= ||V - S|| + ||S - f||.
std::vector<ExperimentRecord> convergence_run(const FamilySpec& spec,
                                              const std::vector<std::pair<int, int>>& mn_list,
                                              double lambda, const RunOptions& options = {});

struct DecompositionRecord {
  int m = 0;
  int n = 0;
  double lambda = 0.0;
  int quad_n = 0;
  std::array<double, 6> component_norms{};  // R0..R5
  double norm_vs = 0.0;
  double relative_residual = 0.0;
};

/// Component norms at a fixed resolution (0 = default_start_resolution of
/// the largest window end in the list).
std::vector<DecompositionRecord> decomposition_norm_run(
    const FamilySpec& spec, const std::vector<std::pair<int, int>>& mn_list, double lambda,
    int quad_n = 0);

std::string experiment_csv(const std::vector<ExperimentRecord>& records);
std::string decomposition_csv(const std::vector<DecompositionRecord>& records);

}  // namespace fourier_l1
