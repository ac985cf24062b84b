#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace betaorder {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Mode or anti-mode requested for a density that has neither.
class ShapeClassError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A comparison was requested between laws that are not ordered as required.
class OrderingError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An iterative method stopped before reaching the requested accuracy.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual, double bracket_lo = 0.0,
                   double bracket_hi = 0.0)
      : std::runtime_error(what),
        residual_(residual),
        bracket_lo_(bracket_lo),
        bracket_hi_(bracket_hi) {}

  double residual() const noexcept { return residual_; }
  std::pair<double, double> bracket() const noexcept { return {bracket_lo_, bracket_hi_}; }

 private:
  double residual_;
  double bracket_lo_;
  double bracket_hi_;
};

}  // namespace betaorder
