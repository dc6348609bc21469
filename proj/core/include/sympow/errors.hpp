#pragma once

#include <stdexcept>
#include <string>

namespace sympow {

// Violated precondition: bad sizes, mismatched dimensions, out-of-range vertex, ...
struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed edge-list input; carries the 1-based line number.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_number, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
        line(line_number) {}
};

// An enumeration or recursion would exceed the configured budget.
struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The requested value lies outside the range the closed formulas cover.
struct OutOfScope : std::domain_error {
  using std::domain_error::domain_error;
};

// Integer arithmetic would wrap around.
struct Overflow : std::overflow_error {
  using std::overflow_error::overflow_error;
};

}  // namespace sympow
