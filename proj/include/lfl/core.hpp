#pragma once

// Shared vocabulary types and error classes for the lfl library.

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace lfl {

/// A point s = sigma + i t of the complex plane.
using ComplexPoint = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr ComplexPoint kI{0.0, 1.0};

/// Argument outside the domain of an operation (including non-finite input).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation requested at a pole of the function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Result would overflow/underflow binary64; use the log-scaled form instead.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// A series or quadrature did not reach its tolerance within the budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double attained_error)
      : std::runtime_error(what + " (attained error " + std::to_string(attained_error) + ")"),
        attained_error_(attained_error) {}

  double attained_error() const noexcept { return attained_error_; }

 private:
  double attained_error_;
};

/// Limits shared by iterative evaluators.
struct AccuracyBudget {
  double abs_tol = 1e-14;
  int series_terms_max = 100000;
  int quadrature_panels_max = 20000;

  void validate() const {
    if (!(abs_tol >= 1e-16) || series_terms_max <= 0 || quadrature_panels_max <= 0) {
      throw DomainError("AccuracyBudget: abs_tol must be >= 1e-16 and caps positive");
    }
  }
};

inline bool is_finite(ComplexPoint s) { return std::isfinite(s.real()) && std::isfinite(s.imag()); }

inline void require_finite(ComplexPoint s, const char* where) {
  if (!is_finite(s)) throw DomainError(std::string(where) + ": non-finite argument");
}

/// True if s lies within `radius` of the real integer n.
inline bool near_integer(ComplexPoint s, double n, double radius) {
  return std::abs(s - ComplexPoint(n, 0.0)) < radius;
}

/// Nearest non-positive integer to s if s is within `radius` of one, else 1.
inline int near_nonpositive_integer(ComplexPoint s, double radius) {
  const double r = std::round(s.real());
  if (r <= 0.0 && std::abs(s - ComplexPoint(r, 0.0)) < radius) return static_cast<int>(r);
  return 1;
}

}  // namespace lfl
