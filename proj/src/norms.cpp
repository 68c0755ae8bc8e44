#include "fourier_l1/norms.hpp"

#include <numbers>
#include <string>
#include <vector>

#include "fourier_l1/error.hpp"
#include "fourier_l1/simd.hpp"

namespace fourier_l1 {
namespace {

double cell_area(const SampleGrid& g) {
  return (2.0 * std::numbers::pi / g.nx()) * (2.0 * std::numbers::pi / g.ny());
}

}  // namespace

// Row sums are added in a fixed order so the result does not depend on the
// thread count.
double l1_norm(const SampleGrid& samples) {
  const auto& kernels = simd::active_kernels();
  double total = 0.0;
  for (int a = 0; a < samples.nx(); ++a) {
    const auto row = samples.row(a);
    total += kernels.sum_abs(row.data(), row.size());
  }
  return total * cell_area(samples);
}

double l1_distance(const SampleGrid& a, const SampleGrid& b) {
  if (!a.same_shape(b)) {
    fail(ErrorKind::shape_mismatch, "cannot measure distance between " + std::to_string(a.nx()) +
                                        "x" + std::to_string(a.ny()) + " and " +
                                        std::to_string(b.nx()) + "x" + std::to_string(b.ny()) +
                                        " sample grids");
  }
  const auto& kernels = simd::active_kernels();
  double total = 0.0;
  for (int r = 0; r < a.nx(); ++r) {
    total += kernels.sum_abs_diff(a.row(r).data(), b.row(r).data(), a.row(r).size());
  }
  return total * cell_area(a);
}

}  // namespace fourier_l1
