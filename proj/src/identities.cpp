#include "fourier_l1/identities.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fourier_l1/error.hpp"
#include "fourier_l1/norms.hpp"
#include "fourier_l1/summability.hpp"
#include "fourier_l1/synthesis.hpp"

namespace fourier_l1 {

double IdentityResidual::relative() const {
  return max_abs_residual / std::max(lhs_scale, 1e-300);
}

int minimum_resolution(int lambda_index) { return 2 * lambda_index + 3; }

KernelSum::KernelSum(int max_j, int max_k) : max_j_(max_j), max_k_(max_k) {
  require(max_j >= 0 && max_k >= 0, "kernel sum magnitudes must be non-negative");
  coef_.assign(static_cast<std::size_t>(half_kernel_rows(max_j)) *
                   static_cast<std::size_t>(half_kernel_rows(max_k)),
               cplx{});
}

void KernelSum::add(const CoefficientGrid& grid, MagnitudeRange j, MagnitudeRange k,
                    DiffOrder order, const Weight& weight) {
  require(j.lo >= 0 && j.hi <= max_j_ && k.lo >= 0 && k.hi <= max_k_,
          "kernel sum term outside the accumulator range");
  const auto cols = static_cast<std::size_t>(half_kernel_rows(max_k_));
  for (int a = j.lo; a <= j.hi; ++a) {
    for (int b = k.lo; b <= k.hi; ++b) {
      const double w = weight(a, b);
      for (SignedIndex sj : {plus(a), minus(a)}) {
        for (SignedIndex sk : {plus(b), minus(b)}) {
          coef_[static_cast<std::size_t>(half_kernel_row(sj)) * cols +
                static_cast<std::size_t>(half_kernel_row(sk))] += w * diff(grid, order, sj, sk);
        }
      }
    }
  }
}

SampleGrid KernelSum::evaluate(int nx, int ny) const {
  return contract(half_kernel_basis(max_j_, nx), coef_, half_kernel_basis(max_k_, ny));
}

namespace {

const DiffOrder d00{0, 0};
const DiffOrder d10{1, 0};
const DiffOrder d01{0, 1};
const DiffOrder d11{1, 1};

void check_preconditions(const CoefficientGrid& grid, const VPParams& params, int nx, int ny) {
  if (grid.bound_j() < params.lambda_m() || grid.bound_k() < params.lambda_n()) {
    fail(ErrorKind::grid_too_small,
         "grid bounds (" + std::to_string(grid.bound_j()) + ", " + std::to_string(grid.bound_k()) +
             ") do not cover the window ends (" + std::to_string(params.lambda_m()) + ", " +
             std::to_string(params.lambda_n()) + ")");
  }
  if (nx < minimum_resolution(params.lambda_m()) || ny < minimum_resolution(params.lambda_n())) {
    fail(ErrorKind::invalid_argument,
         "sample resolution " + std::to_string(nx) + "x" + std::to_string(ny) +
             " is below the aliasing limit " + std::to_string(minimum_resolution(params.lambda_m())) +
             "x" + std::to_string(minimum_resolution(params.lambda_n())));
  }
}

/// (lambda + 1 - |j|) / (lambda - m) for m < |j| <= lambda, zero elsewhere.
ModeWeights tail_weights(int m, int lambda_m) {
  ModeWeights w(lambda_m);
  for (int j = -lambda_m; j <= lambda_m; ++j) {
    const int a = std::abs(j);
    if (a > m) w.set(j, (lambda_m + 1.0 - a) / static_cast<double>(lambda_m - m));
  }
  return w;
}

IdentityResidual compare(std::string lemma, const SampleGrid& lhs, const SampleGrid& rhs) {
  const MaxDeviation dev = max_deviation(lhs, rhs);
  IdentityResidual r;
  r.lemma = std::move(lemma);
  r.max_abs_residual = dev.value;
  r.x = lhs.x(dev.a);
  r.y = lhs.y(dev.b);
  r.lhs_scale = lhs.max_abs();
  return r;
}

struct Window {
  int m, n, lm, ln;
  double dm, dn;

  explicit Window(const VPParams& p)
      : m(p.m()), n(p.n()), lm(p.lambda_m()), ln(p.lambda_n()), dm(lm - m), dn(ln - n) {}

  double u(int a) const { return (lm - a) / dm; }
  double v(int b) const { return (ln - b) / dn; }
};

}  // namespace

IdentityResidual lemma21_residual(const CoefficientGrid& grid, const VPParams& params, int nx,
                                  int ny) {
  check_preconditions(grid, params, nx, ny);
  const Window w(params);
  const auto sigma = [&](int a, int b) { return cesaro_mean(grid, a, b, nx, ny); };

  const SampleGrid lhs = partial_sum(grid, w.m, w.n, nx, ny) - sigma(w.m, w.n);

  const double am = (w.lm + 1.0) / w.dm;
  const double an = (w.ln + 1.0) / w.dn;
  const SampleGrid s_mn = sigma(w.m, w.n);
  const SampleGrid s_Ln = sigma(w.lm, w.n);
  const SampleGrid s_mL = sigma(w.m, w.ln);
  const SampleGrid s_LL = sigma(w.lm, w.ln);

  SampleGrid rhs = cplx{am * an} * (s_LL - s_Ln - s_mL + s_mn);
  rhs += cplx{am} * (s_Ln - s_mn);
  rhs += cplx{an} * (s_mL - s_mn);
  rhs -= synthesize(grid, partial_weights(w.m), tail_weights(w.n, w.ln), nx, ny);
  rhs -= synthesize(grid, tail_weights(w.m, w.lm), partial_weights(w.n), nx, ny);
  rhs -= synthesize(grid, tail_weights(w.m, w.lm), tail_weights(w.n, w.ln), nx, ny);
  return compare("lemma21", lhs, rhs);
}

IdentityResidual lemma22_residual(const CoefficientGrid& grid, const VPParams& params, int nx,
                                  int ny, ThirdTermSign sign) {
  check_preconditions(grid, params, nx, ny);
  const Window w(params);
  const SampleGrid lhs = vp_mean(grid, params, nx, ny) - partial_sum(grid, w.m, w.n, nx, ny);

  SampleGrid rhs = synthesize(grid, tail_weights(w.m, w.lm), tail_weights(w.n, w.ln), nx, ny);
  rhs += synthesize(grid, partial_weights(w.m), tail_weights(w.n, w.ln), nx, ny);
  rhs += cplx{static_cast<double>(sign)} *
         synthesize(grid, tail_weights(w.m, w.lm), partial_weights(w.n), nx, ny);
  return compare(sign == ThirdTermSign::plus ? "lemma22" : "lemma22_opposite_sign", lhs, rhs);
}

ThirdTermSign resolve_third_term_sign(const CoefficientGrid& grid, const VPParams& params, int nx,
                                      int ny) {
  const double plus_r = lemma22_residual(grid, params, nx, ny, ThirdTermSign::plus).relative();
  const double minus_r = lemma22_residual(grid, params, nx, ny, ThirdTermSign::minus).relative();
  return minus_r < plus_r ? ThirdTermSign::minus : ThirdTermSign::plus;
}

IdentityResidual lemma23_residual(const CoefficientGrid& grid, const VPParams& params, int nx,
                                  int ny) {
  check_preconditions(grid, params, nx, ny);
  const Window w(params);
  const SampleGrid lhs = synthesize(grid, partial_weights(w.m), tail_weights(w.n, w.ln), nx, ny);

  KernelSum rhs(w.m, w.ln);
  const MagnitudeRange inner{0, w.m - 1};
  const MagnitudeRange edge{w.m, w.m};
  rhs.add(grid, inner, {w.n, w.ln - 1}, d11, [&](int, int b) { return w.v(b); });
  rhs.add(grid, inner, {w.n + 1, w.ln}, d10, [&](int, int) { return 1.0 / w.dn; });
  rhs.add(grid, inner, {w.n, w.n}, d10, [](int, int) { return -1.0; });
  rhs.add(grid, edge, {w.n, w.ln - 1}, d01, [&](int, int b) { return w.v(b); });
  rhs.add(grid, edge, {w.n + 1, w.ln}, d00, [&](int, int) { return 1.0 / w.dn; });
  rhs.add(grid, edge, {w.n, w.n}, d00, [](int, int) { return -1.0; });
  return compare("lemma23", lhs, rhs.evaluate(nx, ny));
}

IdentityResidual lemma24_residual(const CoefficientGrid& grid, const VPParams& params, int nx,
                                  int ny) {
  check_preconditions(grid, params, nx, ny);
  const Window w(params);
  const SampleGrid lhs =
      synthesize(grid, tail_weights(w.m, w.lm), tail_weights(w.n, w.ln), nx, ny);

  KernelSum rhs(w.lm, w.ln);
  const MagnitudeRange j_body{w.m, w.lm - 1};
  const MagnitudeRange j_tail{w.m + 1, w.lm};
  const MagnitudeRange j_edge{w.m, w.m};
  const MagnitudeRange k_body{w.n, w.ln - 1};
  const MagnitudeRange k_tail{w.n + 1, w.ln};
  const MagnitudeRange k_edge{w.n, w.n};
  rhs.add(grid, j_body, k_body, d11, [&](int a, int b) { return w.u(a) * w.v(b); });
  rhs.add(grid, j_body, k_tail, d10, [&](int a, int) { return w.u(a) / w.dn; });
  rhs.add(grid, j_tail, k_body, d01, [&](int, int b) { return w.v(b) / w.dm; });
  rhs.add(grid, j_body, k_edge, d10, [&](int a, int) { return -w.u(a); });
  rhs.add(grid, j_edge, k_body, d01, [&](int, int b) { return -w.v(b); });
  rhs.add(grid, j_tail, k_edge, d00, [&](int, int) { return -1.0 / w.dm; });
  rhs.add(grid, j_edge, k_tail, d00, [&](int, int) { return -1.0 / w.dn; });
  rhs.add(grid, j_tail, k_tail, d00, [&](int, int) { return 1.0 / (w.dm * w.dn); });
  rhs.add(grid, j_edge, k_edge, d00, [](int, int) { return 1.0; });
  return compare("lemma24", lhs, rhs.evaluate(nx, ny));
}

std::vector<SampleGrid> r_components(const CoefficientGrid& grid, const VPParams& params, int nx,
                                     int ny) {
  const Window w(params);
  const MagnitudeRange j_head{0, w.m - 1};
  const MagnitudeRange j_body{w.m, w.lm - 1};
  const MagnitudeRange j_tail{w.m + 1, w.lm};
  const MagnitudeRange j_edge{w.m, w.m};
  const MagnitudeRange k_head{0, w.n - 1};
  const MagnitudeRange k_body{w.n, w.ln - 1};
  const MagnitudeRange k_tail{w.n + 1, w.ln};
  const MagnitudeRange k_edge{w.n, w.n};
  const auto one = [](int, int) { return 1.0; };

  std::vector<KernelSum> r(6, KernelSum(w.lm, w.ln));
  r[0].add(grid, j_edge, k_edge, d00, one);

  r[1].add(grid, j_body, k_body, d11, [&](int a, int b) { return w.u(a) * w.v(b); });
  r[1].add(grid, j_head, k_body, d11, [&](int, int b) { return w.v(b); });
  r[1].add(grid, j_body, k_head, d11, [&](int a, int) { return w.u(a); });

  r[2].add(grid, j_head, k_tail, d10, [&](int, int) { return 1.0 / w.dn; });
  r[2].add(grid, j_tail, k_head, d01, [&](int, int) { return 1.0 / w.dm; });
  r[2].add(grid, j_body, k_tail, d10, [&](int a, int) { return w.u(a) / w.dn; });
  r[2].add(grid, j_tail, k_body, d01, [&](int, int b) { return w.v(b) / w.dm; });

  r[3].add(grid, j_head, k_edge, d10, one);
  r[4].add(grid, j_edge, k_head, d01, one);
  r[5].add(grid, j_tail, k_tail, d00, [&](int, int) { return 1.0 / (w.dm * w.dn); });

  std::vector<SampleGrid> out;
  out.reserve(r.size());
  for (const KernelSum& term : r) out.push_back(term.evaluate(nx, ny));
  return out;
}

DecompositionResult decompose_v_minus_s(const CoefficientGrid& grid, const VPParams& params,
                                        int nx, int ny) {
  check_preconditions(grid, params, nx, ny);
  std::vector<SampleGrid> comps = r_components(grid, params, nx, ny);
  SampleGrid recon = comps[1] + comps[2] - comps[3] - comps[4] + comps[5] - comps[0];
  SampleGrid v_minus_s =
      vp_mean(grid, params, nx, ny) - partial_sum(grid, params.m(), params.n(), nx, ny);

  IdentityResidual residual = compare("decomposition", v_minus_s, recon);
  std::vector<double> norms;
  norms.reserve(comps.size());
  for (const SampleGrid& c : comps) norms.push_back(l1_norm(c));
  const double norm_vs = l1_norm(v_minus_s);

  double total = 0.0;
  for (double v : norms) total += v;
  if (norm_vs > total * (1.0 + 1e-12) + 1e-300) {
    fail(ErrorKind::internal, "triangle inequality violated: ||V - S|| = " +
                                  std::to_string(norm_vs) + " exceeds the component total " +
                                  std::to_string(total));
  }
  return DecompositionResult{std::move(comps), std::move(recon), std::move(v_minus_s),
                             std::move(residual), std::move(norms), norm_vs};
}

IdentityReport make_report(const IdentityResidual& r, const VPParams& params, int nx, int ny) {
  return IdentityReport{r.lemma,     params.m(),         params.n(),  params.lambda(),
                        nx,          ny,                 r.max_abs_residual,
                        r.lhs_scale, r.relative()};
}

std::vector<IdentityReport> check_all_identities(const CoefficientGrid& grid,
                                                 const VPParams& params, int nx, int ny) {
  std::vector<IdentityReport> out;
  out.push_back(make_report(lemma21_residual(grid, params, nx, ny), params, nx, ny));
  out.push_back(make_report(lemma22_residual(grid, params, nx, ny), params, nx, ny));
  out.push_back(make_report(lemma23_residual(grid, params, nx, ny), params, nx, ny));
  out.push_back(make_report(lemma24_residual(grid, params, nx, ny), params, nx, ny));
  out.push_back(make_report(decompose_v_minus_s(grid, params, nx, ny).residual, params, nx, ny));
  return out;
}

}  // namespace fourier_l1
