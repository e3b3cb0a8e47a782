#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zetali {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain (a = 1/2, T <= 2*pi, ...).
struct DomainError : Error {
  using Error::Error;
};

// Evaluation requested at a pole of the function.
struct PoleError : Error {
  using Error::Error;
};

// The requested absolute-error target cannot be certified.
struct PrecisionError : Error {
  using Error::Error;
};

// log xi / xi'/xi requested where |xi| is below the underflow guard.
struct ZeroOfXiError : Error {
  using Error::Error;
};

// Adaptive quadrature failed to converge, or a circle radius is invalid.
struct QuadratureError : Error {
  using Error::Error;
};

// |f| vanishes (within guard) on a contour that must avoid zeros.
struct BoundaryZeroError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t line_no)
      : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
  explicit ParseError(const std::string& msg) : Error(msg), line(0) {}
  std::size_t line;
};

}  // namespace zetali
