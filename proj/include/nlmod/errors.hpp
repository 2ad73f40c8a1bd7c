#pragma once

#include <stdexcept>
#include <string>

namespace nlmod {

// Base for every error raised by the numerical library. The CLI maps these
// to exit status 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid parameters or a grid that cannot support the requested computation.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

// Sequence length does not match the grid it is paired with.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Argument outside the validated range of a special function.
class RangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace nlmod
