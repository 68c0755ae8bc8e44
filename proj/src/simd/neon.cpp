// AArch64 only; Advanced SIMD is part of the base ISA there, so no runtime
// probe is needed.

#include <arm_neon.h>

#include <cmath>

#include "fourier_l1/simd.hpp"

namespace fourier_l1::simd {
namespace {

// One complex double per register: [re, im].
void caxpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double* xp = reinterpret_cast<const double*>(x);
  double* yp = reinterpret_cast<double*>(y);
  const double signed_imag[2] = {-alpha.imag(), alpha.imag()};
  const float64x2_t ai = vld1q_f64(signed_imag);
  const double ar = alpha.real();
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t xv = vld1q_f64(xp + 2 * i);
    const float64x2_t swapped = vextq_f64(xv, xv, 1);  // [im, re]
    float64x2_t yv = vld1q_f64(yp + 2 * i);
    yv = vfmaq_n_f64(yv, xv, ar);
    yv = vfmaq_f64(yv, swapped, ai);
    vst1q_f64(yp + 2 * i, yv);
  }
}

double sum_abs(const cplx* z, std::size_t n) {
  const double* zp = reinterpret_cast<const double*>(z);
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t a = vld1q_f64(zp + 2 * i);
    const float64x2_t b = vld1q_f64(zp + 2 * i + 2);
    // pairwise add of squares gives [|z0|^2, |z1|^2]
    acc = vaddq_f64(acc, vsqrtq_f64(vpaddq_f64(vmulq_f64(a, a), vmulq_f64(b, b))));
  }
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += std::sqrt(z[i].real() * z[i].real() + z[i].imag() * z[i].imag());
  return s;
}

double sum_abs_diff(const cplx* a, const cplx* b, std::size_t n) {
  const double* ap = reinterpret_cast<const double*>(a);
  const double* bp = reinterpret_cast<const double*>(b);
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t d0 = vsubq_f64(vld1q_f64(ap + 2 * i), vld1q_f64(bp + 2 * i));
    const float64x2_t d1 = vsubq_f64(vld1q_f64(ap + 2 * i + 2), vld1q_f64(bp + 2 * i + 2));
    acc = vaddq_f64(acc, vsqrtq_f64(vpaddq_f64(vmulq_f64(d0, d0), vmulq_f64(d1, d1))));
  }
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) {
    const double re = a[i].real() - b[i].real();
    const double im = a[i].imag() - b[i].imag();
    s += std::sqrt(re * re + im * im);
  }
  return s;
}

}  // namespace

const KernelTable* neon_kernels() {
  static const KernelTable table{"neon", &caxpy, &sum_abs, &sum_abs_diff};
  return &table;
}

}  // namespace fourier_l1::simd
