#include "fourier_l1/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fourier_l1 {

unsigned worker_count() {
  unsigned requested = 0;
  if (const char* env = std::getenv("FOURIER_L1_THREADS")) {
    const char* end = env + std::strlen(env);
    unsigned parsed = 0;
    if (auto [ptr, ec] = std::from_chars(env, end, parsed); ec == std::errc{} && ptr == end) {
      requested = parsed;
    }
  }
  if (requested == 0) requested = std::max(1u, std::thread::hardware_concurrency());
  return requested;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body) {
  if (count == 0) return;
  const std::size_t workers = std::min<std::size_t>(worker_count(), count);
  if (workers <= 1) {
    body(0, count);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t begin = 0; begin < count; begin += chunk) {
    const std::size_t end = std::min(count, begin + chunk);
    threads.emplace_back([&, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  threads.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace fourier_l1
