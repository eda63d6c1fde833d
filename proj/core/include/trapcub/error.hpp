#pragma once

#include <stdexcept>
#include <string>

namespace trapcub {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad n, degenerate interval,
/// point outside the domain, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The integrand returned NaN or an infinity.
class NonFiniteValue : public Error {
 public:
  using Error::Error;
};

/// An operation that needs the sign of the mixed derivative D^{2,2}f was
/// called on an integrand that does not declare it.
class DefinitenessNotDeclared : public Error {
 public:
  DefinitenessNotDeclared() : Error("definiteness not declared") {}
};

/// Romberg iteration ran out of levels. Carries the best estimate reached.
class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(const std::string& what, double best_estimate,
                     double last_change)
      : Error(what), best_estimate_(best_estimate), last_change_(last_change) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double last_change() const noexcept { return last_change_; }

 private:
  double best_estimate_;
  double last_change_;
};

}  // namespace trapcub
