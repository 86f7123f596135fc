#ifndef HYBRID_ERRORS_HPP
#define HYBRID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hybrid {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by zero, or a negative power of a non-invertible element.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// Quadratic-extension operands built over different discriminants.
class DiscriminantMismatch : public Error {
 public:
  using Error::Error;
};

/// Projection to the rationals of an element with a nonzero s-component.
class IrrationalResidue : public Error {
 public:
  using Error::Error;
};

/// Sequence parameters violating q != 0 or p^2 + 4q != 0.
class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (rationals, hybrid literals, JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Malformed or unsatisfiable verification grid.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace hybrid

#endif  // HYBRID_ERRORS_HPP
