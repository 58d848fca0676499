#pragma once

#include <stdexcept>
#include <string>

namespace berry {

/// Base of every numerical failure raised by the library.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain of a function.
class DomainError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Root bracket [lo, hi] without a sign change.
class NoSignChange : public NumericError {
 public:
  using NumericError::NumericError;
};

class MaxIterExceeded : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Adaptive quadrature hit its subdivision limit with the error estimate
/// still above tolerance. A bound built on such a result is unverified.
class NonConvergence : public NumericError {
 public:
  NonConvergence(const std::string& what, double value, double err_estimate)
      : NumericError(what), value_(value), err_estimate_(err_estimate) {}

  double value() const { return value_; }
  double err_estimate() const { return err_estimate_; }

 private:
  double value_;
  double err_estimate_;
};

using IntegrationError = NonConvergence;

/// Exact convolution would exceed the support budget.
class TooLarge : public NumericError {
 public:
  using NumericError::NumericError;
};

/// The n-free tail envelope beats every enumerated n; n_max must be raised.
class TailNotDominated : public NumericError {
 public:
  TailNotDominated(const std::string& what, double eps, double tail_ratio)
      : NumericError(what), eps_(eps), tail_ratio_(tail_ratio) {}

  double eps() const { return eps_; }
  double tail_ratio() const { return tail_ratio_; }

 private:
  double eps_;
  double tail_ratio_;
};

}  // namespace berry
