#pragma once

#include <cstddef>
#include <functional>

namespace fourier_l1 {

/// Worker cap from FOURIER_L1_THREADS (0 or unset = hardware concurrency).
unsigned worker_count();

/// Runs body(begin, end) over contiguous chunks of [0, count). Chunks are
/// disjoint; results must not depend on how the range is split.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace fourier_l1
