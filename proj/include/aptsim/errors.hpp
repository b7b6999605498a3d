#pragma once

#include <stdexcept>
#include <string>

namespace aptsim {

// Bad input: parameters outside a function's domain, malformed files,
// inconsistent configuration. The CLI maps these to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Anything that goes wrong while computing. The CLI maps these to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OverflowError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class InvalidStateError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Tr[U rho U^dagger] underflowed: the evolution lost the whole state.
class DegenerateNormError : public NumericalError {
 public:
  DegenerateNormError(const std::string& what, double time)
      : NumericalError(what), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

// File system failures; the message carries the offending path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace aptsim
