#pragma once

#include <stdexcept>
#include <string>

namespace rffmkl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Matrix/vector dimensions do not line up.
struct ShapeError : Error {
  using Error::Error;
};

// Malformed cell or row in an input file.
struct ParseError : Error {
  using Error::Error;
};

// Group manifest is inconsistent (overlaps, out-of-bounds ranges, ...).
struct ManifestError : Error {
  using Error::Error;
};

// Label token outside the declared label set.
struct LabelError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct ParameterError : Error {
  using Error::Error;
};

struct SplitError : Error {
  using Error::Error;
};

struct NumericError : Error {
  using Error::Error;
};

struct InvariantViolation : Error {
  using Error::Error;
};

struct UndefinedMetricError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace rffmkl
