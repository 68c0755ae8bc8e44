#pragma once

#include <span>
#include <vector>

#include "fourier_l1/grid.hpp"

namespace fourier_l1 {

/// One-dimensional two-sided coefficients c_k for |k| <= bound, zero outside.
class TwoSidedSequence {
 public:
  explicit TwoSidedSequence(int bound);
  /// values[i] holds c_{i - bound}; the span length must be 2*bound + 1.
  TwoSidedSequence(int bound, std::span<const cplx> values);

  int bound() const { return bound_; }

  cplx operator()(int k) const {
    return (k < -bound_ || k > bound_) ? cplx{} : values_[static_cast<std::size_t>(k + bound_)];
  }

  void set(int k, cplx value);

  /// First-order difference away from zero: c_k - c_{k+1} on the plus side,
  /// c_k - c_{k-1} on the minus side.
  cplx diff(SignedIndex k) const { return (*this)(k.value()) - (*this)(k.outward().value()); }

 private:
  int bound_;
  std::vector<cplx> values_;
};

}  // namespace fourier_l1
