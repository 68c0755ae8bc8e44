#include "fourier_l1/error.hpp"

namespace fourier_l1 {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::parse: return "parse error";
    case ErrorKind::duplicate_index: return "duplicate index";
    case ErrorKind::degenerate_window: return "degenerate window";
    case ErrorKind::grid_too_small: return "grid too small";
    case ErrorKind::shape_mismatch: return "shape mismatch";
    case ErrorKind::no_convergence: return "no convergence";
    case ErrorKind::insufficient_resolution: return "insufficient resolution";
    case ErrorKind::unavailable: return "unavailable";
    case ErrorKind::usage: return "usage error";
    case ErrorKind::internal: return "internal error";
  }
  return "error";
}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace fourier_l1
