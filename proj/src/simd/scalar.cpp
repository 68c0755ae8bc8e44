#include <cmath>

#include "fourier_l1/simd.hpp"

namespace fourier_l1::simd {
namespace {

void caxpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double ar = alpha.real();
  const double ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] = {y[i].real() + (ar * xr - ai * xi), y[i].imag() + (ar * xi + ai * xr)};
  }
}

double modulus(double re, double im) { return std::sqrt(re * re + im * im); }

double sum_abs(const cplx* z, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += modulus(z[i].real(), z[i].imag());
  return s;
}

double sum_abs_diff(const cplx* a, const cplx* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s += modulus(a[i].real() - b[i].real(), a[i].imag() - b[i].imag());
  }
  return s;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", &caxpy, &sum_abs, &sum_abs_diff};
  return table;
}

}  // namespace fourier_l1::simd
