#include <cstdlib>
#include <string_view>

#include "fourier_l1/simd.hpp"

namespace fourier_l1::simd {

#ifndef FOURIER_L1_HAVE_AVX2
const KernelTable* avx2_kernels() { return nullptr; }
#endif

#ifndef FOURIER_L1_HAVE_NEON
const KernelTable* neon_kernels() { return nullptr; }
#endif

namespace {

const KernelTable& select() {
  if (const char* forced = std::getenv("FOURIER_L1_SIMD")) {
    if (std::string_view(forced) == "scalar") return scalar_kernels();
  }
  if (const KernelTable* t = avx2_kernels()) return *t;
  if (const KernelTable* t = neon_kernels()) return *t;
  return scalar_kernels();
}

}  // namespace

const KernelTable& active_kernels() {
  static const KernelTable& table = select();
  return table;
}

}  // namespace fourier_l1::simd
