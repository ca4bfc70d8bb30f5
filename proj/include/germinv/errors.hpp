// Error taxonomy shared by the whole library. Each class maps onto one CLI
// exit code: UsageError -> 1, ParseError -> 2, MathError -> 3, BoundError -> 4.
#pragma once

#include <stdexcept>
#include <string>

namespace germinv {

struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntax/resolution failure in an expression or input document.
struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " at " + std::to_string(line_) + ":" +
                           std::to_string(col_)),
        line(line_),
        col(col_) {}
};

// Violated mathematical precondition (zero polynomial where nonzero is
// required, tangency failure, uninstantiated parameter, ...).
struct MathError : std::runtime_error {
  explicit MathError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource bound (standard-monomial count) was exceeded.
struct BoundError : std::runtime_error {
  explicit BoundError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace germinv
