#include "fourier_l1/sequence.hpp"

#include <cmath>
#include <string>

#include "fourier_l1/error.hpp"

namespace fourier_l1 {

TwoSidedSequence::TwoSidedSequence(int bound) : bound_(bound) {
  require(bound >= 0, "sequence bound must be non-negative");
  values_.assign(static_cast<std::size_t>(2 * bound + 1), cplx{});
}

TwoSidedSequence::TwoSidedSequence(int bound, std::span<const cplx> values)
    : TwoSidedSequence(bound) {
  require(values.size() == values_.size(), "sequence storage must hold 2*bound+1 values");
  for (std::size_t i = 0; i < values.size(); ++i) set(static_cast<int>(i) - bound, values[i]);
}

void TwoSidedSequence::set(int k, cplx value) {
  require(k >= -bound_ && k <= bound_, "sequence index " + std::to_string(k) + " out of range");
  require(std::isfinite(value.real()) && std::isfinite(value.imag()),
          "sequence values must be finite");
  values_[static_cast<std::size_t>(k + bound_)] = value;
}

}  // namespace fourier_l1
