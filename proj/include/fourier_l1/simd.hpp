#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference version;
// vector variants are picked at runtime and tested for equivalence against it.

#include <complex>
#include <cstddef>
#include <string_view>

namespace fourier_l1::simd {

using cplx = std::complex<double>;

struct KernelTable {
  std::string_view name;
  /// y[i] += alpha * x[i]
  void (*caxpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
  /// sum_i |z[i]|
  double (*sum_abs)(const cplx* z, std::size_t n);
  /// sum_i |a[i] - b[i]|
  double (*sum_abs_diff)(const cplx* a, const cplx* b, std::size_t n);
};

const KernelTable& scalar_kernels();

/// nullptr when the variant was not compiled in or the CPU lacks it.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

/// Best available table. FOURIER_L1_SIMD=scalar forces the reference path.
const KernelTable& active_kernels();

}  // namespace fourier_l1::simd
