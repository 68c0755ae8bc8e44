#pragma once

// Truncated double Fourier coefficients c_jk and the directional difference
// calculus on them.

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fourier_l1 {

using cplx = std::complex<double>;

enum class Sign : std::int8_t { plus = 1, minus = -1 };

/// An index carried as (sign, magnitude). Magnitude 0 exists with both signs:
/// "0+" and "0-" are distinct positions, one at the start of each half-line.
struct SignedIndex {
  Sign sign = Sign::plus;
  int magnitude = 0;

  constexpr int step() const { return sign == Sign::plus ? 1 : -1; }
  constexpr int value() const { return step() * magnitude; }

  /// The neighbour one step further from zero.
  constexpr SignedIndex outward(int steps = 1) const { return {sign, magnitude + steps}; }

  friend constexpr bool operator==(const SignedIndex&, const SignedIndex&) = default;
};

constexpr SignedIndex plus(int magnitude) { return {Sign::plus, magnitude}; }
constexpr SignedIndex minus(int magnitude) { return {Sign::minus, magnitude}; }

/// Signed index of a plain integer; 0 maps to 0+.
constexpr SignedIndex signed_index(int value) {
  return value < 0 ? minus(-value) : plus(value);
}

std::string to_string(SignedIndex index);

/// Difference order (p, q) of Delta_pq, with p, q in {0, 1, 2}.
class DiffOrder {
 public:
  DiffOrder(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }

 private:
  int p_;
  int q_;
};

/// Dense coefficients for |j| <= bound_j, |k| <= bound_k; every lookup outside
/// the box reads zero. Grids are filled during construction and only read
/// afterwards.
class CoefficientGrid {
 public:
  CoefficientGrid(int bound_j, int bound_k);

  int bound_j() const { return bound_j_; }
  int bound_k() const { return bound_k_; }
  int rows() const { return 2 * bound_j_ + 1; }
  int cols() const { return 2 * bound_k_ + 1; }

  bool contains(int j, int k) const {
    return j >= -bound_j_ && j <= bound_j_ && k >= -bound_k_ && k <= bound_k_;
  }

  cplx operator()(int j, int k) const {
    return contains(j, k) ? values_[offset(j, k)] : cplx{};
  }

  /// Throws on out-of-range indices and on non-finite values.
  void set(int j, int k, cplx value);

  /// Row-major storage, row j + bound_j, column k + bound_k.
  std::span<const cplx> values() const { return values_; }

  CoefficientGrid scaled(cplx factor) const;

 private:
  std::size_t offset(int j, int k) const {
    return static_cast<std::size_t>(j + bound_j_) * static_cast<std::size_t>(cols()) +
           static_cast<std::size_t>(k + bound_k_);
  }

  int bound_j_;
  int bound_k_;
  std::vector<cplx> values_;
};

cplx get(const CoefficientGrid& grid, int j, int k);

/// Delta_pq c_jk, stepping away from zero along each axis: for a plus-signed
/// j the first-order step is c_jk - c_{j+1,k}, for a minus-signed j it is
/// c_jk - c_{j-1,k}; likewise in k. Higher orders are compositions.
cplx diff(const CoefficientGrid& grid, DiffOrder order, SignedIndex j, SignedIndex k);

/// Coefficient file: one "j k re im" per line, '#' starts a comment.
CoefficientGrid load_grid(std::string_view text);

/// Inverse of load_grid. Emits every stored entry sorted by (j, k) so that the
/// bounds survive the round trip.
std::string save_grid(const CoefficientGrid& grid);

CoefficientGrid read_grid_file(const std::string& path);

}  // namespace fourier_l1
