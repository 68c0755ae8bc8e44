#pragma once

// Separable evaluation of sum_{r,s} coef(r, s) * bx_r(x_a) * by_s(y_b) on a
// uniform torus grid. Every mean, lemma term and decomposition component in
// the library is one call to contract() with a suitable pair of basis tables.

#include <span>
#include <vector>

#include "fourier_l1/grid.hpp"
#include "fourier_l1/sample_grid.hpp"

namespace fourier_l1 {

/// rows() basis functions sampled at points() uniform nodes.
class BasisTable {
 public:
  BasisTable(int rows, int points);

  int rows() const { return rows_; }
  int points() const { return points_; }

  std::span<cplx> row(int r) {
    return {data_.data() + static_cast<std::size_t>(r) * static_cast<std::size_t>(points_),
            static_cast<std::size_t>(points_)};
  }
  std::span<const cplx> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * static_cast<std::size_t>(points_),
            static_cast<std::size_t>(points_)};
  }

 private:
  int rows_;
  int points_;
  std::vector<cplx> data_;
};

/// Row j + bound holds e^{i j x_a}, |j| <= bound.
BasisTable exponential_basis(int bound, int points);

/// Row half_kernel_row(s) holds the summation kernel of signed index s,
/// 1/2 + sum_{t=1}^{|s|} e^{i sign(s) t x_a}, for magnitudes 0..max_magnitude.
BasisTable half_kernel_basis(int max_magnitude, int points);

constexpr int half_kernel_row(SignedIndex s) {
  return 2 * s.magnitude + (s.sign == Sign::minus ? 1 : 0);
}

constexpr int half_kernel_rows(int max_magnitude) { return 2 * (max_magnitude + 1); }

/// coef is bx.rows() x by.rows(), row-major.
SampleGrid contract(const BasisTable& bx, std::span<const cplx> coef, const BasisTable& by);

}  // namespace fourier_l1
