#include "fourier_l1/synthesis.hpp"

#include <complex>

#include "fourier_l1/error.hpp"
#include "fourier_l1/parallel.hpp"
#include "fourier_l1/simd.hpp"

namespace fourier_l1 {

BasisTable::BasisTable(int rows, int points) : rows_(rows), points_(points) {
  require(rows >= 0 && points >= 1, "basis table needs a non-negative row count and points");
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(points), cplx{});
}

BasisTable exponential_basis(int bound, int points) {
  require(bound >= 0, "exponential basis bound must be non-negative");
  BasisTable table(2 * bound + 1, points);
  const std::vector<double> nodes = torus_nodes(points);
  for (int j = -bound; j <= bound; ++j) {
    auto row = table.row(j + bound);
    for (int a = 0; a < points; ++a) row[static_cast<std::size_t>(a)] = std::polar(1.0, j * nodes[static_cast<std::size_t>(a)]);
  }
  return table;
}

BasisTable half_kernel_basis(int max_magnitude, int points) {
  require(max_magnitude >= 0, "kernel basis magnitude must be non-negative");
  BasisTable table(half_kernel_rows(max_magnitude), points);
  const std::vector<double> nodes = torus_nodes(points);
  for (int a = 0; a < points; ++a) {
    const auto i = static_cast<std::size_t>(a);
    cplx running{0.5, 0.0};
    table.row(half_kernel_row(plus(0)))[i] = running;
    table.row(half_kernel_row(minus(0)))[i] = running;
    for (int t = 1; t <= max_magnitude; ++t) {
      running += std::polar(1.0, t * nodes[i]);
      table.row(half_kernel_row(plus(t)))[i] = running;
      table.row(half_kernel_row(minus(t)))[i] = std::conj(running);
    }
  }
  return table;
}

SampleGrid contract(const BasisTable& bx, std::span<const cplx> coef, const BasisTable& by) {
  const auto rows_x = static_cast<std::size_t>(bx.rows());
  const auto rows_y = static_cast<std::size_t>(by.rows());
  if (coef.size() != rows_x * rows_y) {
    fail(ErrorKind::shape_mismatch, "coefficient block does not match the basis tables");
  }
  const int nx = bx.points();
  const int ny = by.points();
  const auto& kernels = simd::active_kernels();

  // Stage 1: partial[r] = sum_s coef(r, s) * by_s
  std::vector<cplx> partial(rows_x * static_cast<std::size_t>(ny));
  std::vector<char> live(rows_x, 0);
  parallel_for(rows_x, [&](std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      cplx* dst = partial.data() + r * static_cast<std::size_t>(ny);
      for (std::size_t s = 0; s < rows_y; ++s) {
        const cplx c = coef[r * rows_y + s];
        if (c == cplx{}) continue;
        kernels.caxpy(c, by.row(static_cast<int>(s)).data(), dst, static_cast<std::size_t>(ny));
        live[r] = 1;
      }
    }
  });

  // Stage 2: out(a, .) = sum_r bx_r(x_a) * partial[r]
  SampleGrid out(nx, ny);
  parallel_for(static_cast<std::size_t>(nx), [&](std::size_t begin, std::size_t end) {
    for (std::size_t a = begin; a < end; ++a) {
      cplx* dst = out.row(static_cast<int>(a)).data();
      for (std::size_t r = 0; r < rows_x; ++r) {
        if (!live[r]) continue;
        kernels.caxpy(bx.row(static_cast<int>(r))[a],
                      partial.data() + r * static_cast<std::size_t>(ny), dst,
                      static_cast<std::size_t>(ny));
      }
    }
  });
  return out;
}

}  // namespace fourier_l1
