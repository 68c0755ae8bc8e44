#pragma once

#include "fourier_l1/sample_grid.hpp"

namespace fourier_l1 {

/// Rectangle rule on the half-open grid: (2 pi / nx)(2 pi / ny) sum |g|.
double l1_norm(const SampleGrid& samples);

/// l1_norm(a - b); throws shape_mismatch for different resolutions.
double l1_distance(const SampleGrid& a, const SampleGrid& b);

}  // namespace fourier_l1
