#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fourier_l1 {

enum class ErrorKind {
  invalid_argument,
  parse,
  duplicate_index,
  degenerate_window,
  grid_too_small,
  shape_mismatch,
  no_convergence,
  insufficient_resolution,
  unavailable,
  usage,
  internal,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` lets callers (the CLI in
/// particular) map failures to exit codes without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure carrying the 1-based line number of the offending input.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

inline void require(bool condition, const std::string& message) {
  if (!condition) fail(ErrorKind::invalid_argument, message);
}

}  // namespace fourier_l1
