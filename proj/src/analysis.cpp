#include "fourier_l1/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "fourier_l1/error.hpp"
#include "fourier_l1/format.hpp"
#include "fourier_l1/identities.hpp"
#include "fourier_l1/kernels.hpp"
#include "fourier_l1/summability.hpp"

namespace fourier_l1 {

RefineResult refine(const std::function<double(int)>& norm_at, int start_n, double tol,
                    int max_n) {
  require(std::isfinite(tol) && tol > 0.0, "refinement tolerance must be positive");
  require(start_n >= 1, "starting resolution must be positive");
  require(max_n >= start_n, "maximum resolution must not be below the starting resolution");
  RefineResult r;
  r.n = start_n;
  r.value = norm_at(start_n);
  while (true) {
    const int next = 2 * r.n;
    const double v = norm_at(next);
    r.delta = std::abs(v - r.value);
    r.value = v;
    r.n = next;
    if (r.delta < tol) {
      r.converged = true;
      break;
    }
    if (2 * next > max_n) break;
  }
  return r;
}

void require_converged(const RefineResult& result, double tol) {
  if (!result.converged) {
    fail(ErrorKind::no_convergence,
         "quadrature did not converge: delta " + format_real(result.delta) + " at N = " +
             std::to_string(result.n) + " exceeds tolerance " + format_real(tol));
  }
}

int default_start_resolution(int max_frequency) { return std::max(64, 2 * max_frequency + 3); }

namespace {

struct Norms {
  double sf, sigma_f, vf, vs;
};

/// Samples of the reference function: closed form, or the certified
/// truncation when there is none.
class Reference {
 public:
  Reference(const FamilySpec& spec, double epsilon) : spec_(spec) {
    if (!closed_form(spec, 1, 1)) {
      const auto [J, K] = reference_truncation(spec, epsilon);
      truncated_.emplace(build(spec, J, K));
    }
  }

  SampleGrid at(int nx, int ny) const {
    if (truncated_) {
      return partial_sum(*truncated_, truncated_->bound_j(), truncated_->bound_k(), nx, ny);
    }
    return *closed_form(spec_, nx, ny);
  }

 private:
  const FamilySpec& spec_;
  std::optional<CoefficientGrid> truncated_;
};

Norms norms_at(const CoefficientGrid& grid, const VPParams& params, const Reference& ref, int N) {
  const SampleGrid f = ref.at(N, N);
  const SampleGrid s = partial_sum(grid, params.m(), params.n(), N, N);
  const SampleGrid sigma = cesaro_mean(grid, params.m(), params.n(), N, N);
  const SampleGrid v = vp_mean(grid, params, N, N);
  return {l1_distance(s, f), l1_distance(sigma, f), l1_distance(v, f), l1_distance(v, s)};
}

void sort_by_min(std::vector<std::pair<int, int>>& mn) {
  std::stable_sort(mn.begin(), mn.end(), [](const auto& a, const auto& b) {
    return std::min(a.first, a.second) < std::min(b.first, b.second);
  });
}

}  // namespace

std::vector<ExperimentRecord> convergence_run(const FamilySpec& spec,
                                              const std::vector<std::pair<int, int>>& mn_list,
                                              double lambda, const RunOptions& options) {
  validate(spec);
  require(!mn_list.empty(), "the (m, n) list is empty");
  std::vector<std::pair<int, int>> order = mn_list;
  sort_by_min(order);
  std::vector<VPParams> windows;
  for (const auto& [m, n] : order) {
    require(m >= 1 && n >= 1, "m and n must be positive");
    windows.emplace_back(lambda, m, n);
  }
  const Reference ref(spec, options.tol / 10.0);

  std::vector<ExperimentRecord> out;
  for (const VPParams& p : windows) {
    const CoefficientGrid grid = build(spec, p.lambda_m(), p.lambda_n());
    const int start = options.start_n > 0
                          ? options.start_n
                          : default_start_resolution(std::max(p.lambda_m(), p.lambda_n()));
    std::map<int, Norms> seen;
    const RefineResult r = refine(
        [&](int N) {
          const Norms v = norms_at(grid, p, ref, N);
          seen[N] = v;
          return v.sf;
        },
        start, options.tol, std::max(options.max_n, start));
    const Norms& best = seen.at(r.n);
    if (best.vf > (best.vs + best.sf) * (1.0 + 1e-12) + 1e-14) {
      fail(ErrorKind::internal, "triangle inequality violated at m = " + std::to_string(p.m()) +
                                    ", n = " + std::to_string(p.n()));
    }
    out.push_back({p.m(), p.n(), lambda, best.sf, best.sigma_f, best.vf, best.vs, r.n, r.delta,
                   r.converged});
  }
  return out;
}

std::vector<DecompositionRecord> decomposition_norm_run(
    const FamilySpec& spec, const std::vector<std::pair<int, int>>& mn_list, double lambda,
    int quad_n) {
  validate(spec);
  require(!mn_list.empty(), "the (m, n) list is empty");
  require(quad_n >= 0, "resolution must be non-negative");
  std::vector<std::pair<int, int>> order = mn_list;
  sort_by_min(order);
  std::vector<VPParams> windows;
  int widest = 0;
  for (const auto& [m, n] : order) {
    require(m >= 1 && n >= 1, "m and n must be positive");
    windows.emplace_back(lambda, m, n);
    widest = std::max({widest, windows.back().lambda_m(), windows.back().lambda_n()});
  }
  const int N = quad_n > 0 ? quad_n : default_start_resolution(widest);

  std::vector<DecompositionRecord> out;
  for (const VPParams& p : windows) {
    const CoefficientGrid grid = build(spec, p.lambda_m(), p.lambda_n());
    const DecompositionResult d = decompose_v_minus_s(grid, p, N, N);
    DecompositionRecord rec{p.m(), p.n(), lambda, N, {}, d.norm_v_minus_s, d.residual.relative()};
    std::copy(d.component_norms.begin(), d.component_norms.end(), rec.component_norms.begin());
    out.push_back(rec);
  }
  return out;
}

std::string experiment_csv(const std::vector<ExperimentRecord>& records) {
  std::string out = "m,n,lambda,norm_S_f,norm_sigma_f,norm_V_f,norm_V_S,quad_n,refine_delta\n";
  for (const ExperimentRecord& r : records) {
    out += std::to_string(r.m) + "," + std::to_string(r.n) + "," + format_real(r.lambda) + "," +
           format_real(r.norm_sf) + "," + format_real(r.norm_sigma_f) + "," +
           format_real(r.norm_vf) + "," + format_real(r.norm_vs) + "," +
           std::to_string(r.quad_n) + "," + format_real(r.refinement_delta) + "\n";
  }
  return out;
}

std::string decomposition_csv(const std::vector<DecompositionRecord>& records) {
  std::string out =
      "m,n,lambda,quad_n,norm_R0,norm_R1,norm_R2,norm_R3,norm_R4,norm_R5,norm_V_S,"
      "relative_residual\n";
  for (const DecompositionRecord& r : records) {
    out += std::to_string(r.m) + "," + std::to_string(r.n) + "," + format_real(r.lambda) + "," +
           std::to_string(r.quad_n);
    for (double v : r.component_norms) out += "," + format_real(v);
    out += "," + format_real(r.norm_vs) + "," + format_real(r.relative_residual) + "\n";
  }
  return out;
}

}  // namespace fourier_l1
