#pragma once

#include <stdexcept>
#include <string>

namespace xdp {

// Base for every error raised by the library. The CLI maps the concrete
// subclasses onto distinct exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A dimension (or list of dimensions) that is zero or otherwise unusable.
class InvalidDimensionError : public Error {
 public:
  using Error::Error;
};

// Operand shapes that do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// 64-bit dimension arithmetic overflowed.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Zero-norm vectors, zero columns and similar degenerate inputs.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// A search exceeded its configured bound (e.g. exhaustive spark search).
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Malformed input data (non-finite entries, unparsable files).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace xdp
