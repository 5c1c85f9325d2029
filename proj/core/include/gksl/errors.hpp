#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gksl {

// Base for every error raised by the library. Numerical verdicts (audits,
// positivity, classification) are reported as values, never thrown.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDimension : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class InconsistentBasis : public Error {
 public:
  using Error::Error;
};

// Bad user input for a generator. `field()` names the offending field ("H",
// "L[2]", "hbar", ...) so file-level diagnostics can point at it.
class InvalidSpec : public Error {
 public:
  InvalidSpec(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Two independent routes to the same quantity disagreed. Signals a bug or an
// input so ill-conditioned that the double-precision result is meaningless.
class InternalConsistencyError : public Error {
 public:
  InternalConsistencyError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace gksl
