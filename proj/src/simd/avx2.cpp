// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include <cmath>

#include "fourier_l1/simd.hpp"

namespace fourier_l1::simd {
namespace {

// Two complex doubles per register: [re0, im0, re1, im1].
inline __m256d cmul(__m256d x, __m256d ar, __m256d ai) {
  const __m256d swapped = _mm256_permute_pd(x, 0b0101);  // [im0, re0, im1, re1]
  return _mm256_fmaddsub_pd(x, ar, _mm256_mul_pd(swapped, ai));
}

void caxpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double* xp = reinterpret_cast<const double*>(x);
  double* yp = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x0 = _mm256_loadu_pd(xp + 2 * i);
    const __m256d x1 = _mm256_loadu_pd(xp + 2 * i + 4);
    const __m256d y0 = _mm256_loadu_pd(yp + 2 * i);
    const __m256d y1 = _mm256_loadu_pd(yp + 2 * i + 4);
    _mm256_storeu_pd(yp + 2 * i, _mm256_add_pd(y0, cmul(x0, ar, ai)));
    _mm256_storeu_pd(yp + 2 * i + 4, _mm256_add_pd(y1, cmul(x1, ar, ai)));
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d x0 = _mm256_loadu_pd(xp + 2 * i);
    const __m256d y0 = _mm256_loadu_pd(yp + 2 * i);
    _mm256_storeu_pd(yp + 2 * i, _mm256_add_pd(y0, cmul(x0, ar, ai)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

// |z| for four complex values held in two registers, in the order
// [z0, z2, z1, z3] (hadd works within 128-bit lanes; the order does not
// matter for a sum).
inline __m256d moduli4(__m256d z01, __m256d z23) {
  const __m256d sq = _mm256_hadd_pd(_mm256_mul_pd(z01, z01), _mm256_mul_pd(z23, z23));
  return _mm256_sqrt_pd(sq);
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double sum_abs(const cplx* z, std::size_t n) {
  const double* zp = reinterpret_cast<const double*>(z);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, moduli4(_mm256_loadu_pd(zp + 2 * i), _mm256_loadu_pd(zp + 2 * i + 4)));
    acc1 = _mm256_add_pd(acc1, moduli4(_mm256_loadu_pd(zp + 2 * i + 8),
                                       _mm256_loadu_pd(zp + 2 * i + 12)));
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += std::sqrt(z[i].real() * z[i].real() + z[i].imag() * z[i].imag());
  return s;
}

double sum_abs_diff(const cplx* a, const cplx* b, std::size_t n) {
  const double* ap = reinterpret_cast<const double*>(a);
  const double* bp = reinterpret_cast<const double*>(b);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(ap + 2 * i), _mm256_loadu_pd(bp + 2 * i));
    const __m256d d1 = _mm256_sub_pd(_mm256_loadu_pd(ap + 2 * i + 4), _mm256_loadu_pd(bp + 2 * i + 4));
    const __m256d d2 = _mm256_sub_pd(_mm256_loadu_pd(ap + 2 * i + 8), _mm256_loadu_pd(bp + 2 * i + 8));
    const __m256d d3 =
        _mm256_sub_pd(_mm256_loadu_pd(ap + 2 * i + 12), _mm256_loadu_pd(bp + 2 * i + 12));
    acc0 = _mm256_add_pd(acc0, moduli4(d0, d1));
    acc1 = _mm256_add_pd(acc1, moduli4(d2, d3));
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) {
    const double re = a[i].real() - b[i].real();
    const double im = a[i].imag() - b[i].imag();
    s += std::sqrt(re * re + im * im);
  }
  return s;
}

}  // namespace

const KernelTable* avx2_kernels() {
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  static const KernelTable table{"avx2", &caxpy, &sum_abs, &sum_abs_diff};
  return supported ? &table : nullptr;
}

}  // namespace fourier_l1::simd
