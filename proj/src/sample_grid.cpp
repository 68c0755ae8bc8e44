#include "fourier_l1/sample_grid.hpp"

#include <algorithm>
#include <string>

#include "fourier_l1/error.hpp"

namespace fourier_l1 {

std::vector<double> torus_nodes(int count) {
  std::vector<double> nodes(static_cast<std::size_t>(count));
  for (int a = 0; a < count; ++a) nodes[static_cast<std::size_t>(a)] = torus_node(a, count);
  return nodes;
}

SampleGrid::SampleGrid(int nx, int ny) : nx_(nx), ny_(ny) {
  require(nx >= 1 && ny >= 1, "sample grid resolution must be positive");
  values_.assign(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny), cplx{});
}

SampleGrid::SampleGrid(int nx, int ny, std::vector<cplx> values)
    : nx_(nx), ny_(ny), values_(std::move(values)) {
  require(nx >= 1 && ny >= 1, "sample grid resolution must be positive");
  if (values_.size() != static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny)) {
    fail(ErrorKind::shape_mismatch, "sample storage does not match " + std::to_string(nx) + "x" +
                                        std::to_string(ny));
  }
}

double SampleGrid::max_abs() const {
  double m = 0.0;
  for (const cplx& v : values_) m = std::max(m, std::abs(v));
  return m;
}

double SampleGrid::max_abs_imag() const {
  double m = 0.0;
  for (const cplx& v : values_) m = std::max(m, std::abs(v.imag()));
  return m;
}

namespace {

void check_shape(const SampleGrid& a, const SampleGrid& b) {
  if (!a.same_shape(b)) {
    fail(ErrorKind::shape_mismatch,
         "sample grids differ in shape: " + std::to_string(a.nx()) + "x" + std::to_string(a.ny()) +
             " vs " + std::to_string(b.nx()) + "x" + std::to_string(b.ny()));
  }
}

}  // namespace

SampleGrid& SampleGrid::operator+=(const SampleGrid& other) {
  check_shape(*this, other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

SampleGrid& SampleGrid::operator-=(const SampleGrid& other) {
  check_shape(*this, other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

SampleGrid& SampleGrid::operator*=(cplx factor) {
  for (cplx& v : values_) v *= factor;
  return *this;
}

MaxDeviation max_deviation(const SampleGrid& lhs, const SampleGrid& rhs) {
  check_shape(lhs, rhs);
  MaxDeviation out;
  for (int a = 0; a < lhs.nx(); ++a) {
    for (int b = 0; b < lhs.ny(); ++b) {
      const double d = std::abs(lhs(a, b) - rhs(a, b));
      if (d > out.value) out = {d, a, b};
    }
  }
  return out;
}

}  // namespace fourier_l1
