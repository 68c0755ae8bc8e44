#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "fourier_l1/grid.hpp"

namespace fourier_l1 {

/// Uniform half-open node n of a resolution-`count` grid on [-pi, pi).
inline double torus_node(int index, int count) {
  return -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(index) /
                                 static_cast<double>(count);
}

std::vector<double> torus_nodes(int count);

/// Complex samples on x_a = -pi + 2 pi a / nx, y_b = -pi + 2 pi b / ny.
/// Storage is row-major in x: value(a, b) lives at a * ny + b.
class SampleGrid {
 public:
  SampleGrid(int nx, int ny);
  SampleGrid(int nx, int ny, std::vector<cplx> values);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double x(int a) const { return torus_node(a, nx_); }
  double y(int b) const { return torus_node(b, ny_); }

  cplx& operator()(int a, int b) { return values_[index(a, b)]; }
  cplx operator()(int a, int b) const { return values_[index(a, b)]; }

  std::span<cplx> row(int a) { return {values_.data() + index(a, 0), static_cast<std::size_t>(ny_)}; }
  std::span<const cplx> row(int a) const {
    return {values_.data() + index(a, 0), static_cast<std::size_t>(ny_)};
  }
  std::span<const cplx> values() const { return values_; }
  std::span<cplx> values() { return values_; }

  bool same_shape(const SampleGrid& other) const { return nx_ == other.nx_ && ny_ == other.ny_; }

  double max_abs() const;
  double max_abs_imag() const;

  SampleGrid& operator+=(const SampleGrid& other);
  SampleGrid& operator-=(const SampleGrid& other);
  SampleGrid& operator*=(cplx factor);

  friend SampleGrid operator+(SampleGrid a, const SampleGrid& b) { return a += b; }
  friend SampleGrid operator-(SampleGrid a, const SampleGrid& b) { return a -= b; }
  friend SampleGrid operator*(cplx s, SampleGrid a) { return a *= s; }

 private:
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(ny_) + static_cast<std::size_t>(b);
  }

  int nx_;
  int ny_;
  std::vector<cplx> values_;
};

/// Location and size of the largest |a - b| over two same-shape grids.
struct MaxDeviation {
  double value = 0.0;
  int a = 0;
  int b = 0;
};

MaxDeviation max_deviation(const SampleGrid& lhs, const SampleGrid& rhs);

}  // namespace fourier_l1
