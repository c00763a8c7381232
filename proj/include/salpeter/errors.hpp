#pragma once

#include <stdexcept>
#include <string>

namespace salpeter {

// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// A value outside its documented domain. `field()` names the offender.
class InvalidParameter : public Error {
public:
  InvalidParameter(std::string field, const std::string &msg)
      : Error(field + ": " + msg), field_(std::move(field)) {}
  const std::string &field() const { return field_; }

private:
  std::string field_;
};

// Integrand produced NaN or infinity at a sample point.
class InvalidIntegrand : public Error {
public:
  using Error::Error;
};

// Iteration/subdivision budget exhausted. Carries the best estimate so
// callers can decide whether it is still usable.
class ConvergenceFailure : public Error {
public:
  ConvergenceFailure(const std::string &msg, double best_value,
                     double best_error)
      : Error(msg), best_value_(best_value), best_error_(best_error) {}
  double best_value() const { return best_value_; }
  double best_error() const { return best_error_; }

private:
  double best_value_;
  double best_error_;
};

// Energy at or above the bound-state threshold E < m.
class ThresholdViolation : public Error {
public:
  using Error::Error;
};

// Coupling too weak to support a bound state.
class NoBoundState : public Error {
public:
  using Error::Error;
};

// One-dimensional minimizer found no interior bracket.
class MinimizationFailure : public Error {
public:
  using Error::Error;
};

} // namespace salpeter
