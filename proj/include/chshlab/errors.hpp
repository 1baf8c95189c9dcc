#pragma once

#include <stdexcept>
#include <string>

namespace chshlab {

/// Input that violates a type invariant (normalization, unit length, ...).
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A scalar parameter outside its admissible interval.
class RangeError : public ValidationError {
 public:
  explicit RangeError(const std::string& what) : ValidationError(what) {}
};

/// A value no correct computation can produce, e.g. a CHSH value above 4.
class ImpossibleValueError : public ValidationError {
 public:
  explicit ImpossibleValueError(const std::string& what) : ValidationError(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chshlab
