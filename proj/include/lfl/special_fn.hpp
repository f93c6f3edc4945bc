#pragma once

// Complex gamma, upper incomplete gamma, K-Bessel of complex order and the
// Jacobi theta function on the imaginary axis. Every other module builds on
// these evaluators; all are pure functions of their arguments.

#include "lfl/core.hpp"

namespace lfl {

/// Principal branch of log Gamma(s): the continuation from the positive reals
/// with the cut on the negative real axis. Lanczos approximation for
/// Re s >= 1/2, upward recurrence below. Throws PoleError at s = 0, -1, -2, ...
ComplexPoint log_gamma(ComplexPoint s);

/// Gamma(s). Throws RangeError when the value over/underflows binary64
/// (large |Im s| makes e^{-pi|t|/2} underflow); use log_gamma then.
ComplexPoint gamma(ComplexPoint s);

/// 1/Gamma(s), entire: exactly 0 at the non-positive integers.
ComplexPoint rgamma(ComplexPoint s);

/// Upper incomplete gamma Gamma(s, x) = int_x^inf e^{-t} t^{s-1} dt for x > 0.
///
/// Uses the Legendre continued fraction when x is large relative to |s| or
/// when s is near a non-positive integer (where Gamma(s) has a pole but
/// Gamma(s, x) does not); otherwise Gamma(s) minus the lower-gamma series.
/// Throws BudgetExceeded if neither route converges within the budget.
ComplexPoint upper_incomplete_gamma(ComplexPoint s, double x, const AccuracyBudget& budget = {});

/// Modified Bessel function K_order(y) for complex order and real y > 0.
ComplexPoint bessel_k(ComplexPoint order, double y, const AccuracyBudget& budget = {});

/// theta(it) = 1/2 + sum_{n>=1} exp(-pi n^2 t) for t > 0. Arguments t < 1 are
/// mapped through the Jacobi transformation theta(it) = t^{-1/2} theta(i/t).
double theta(double t, double abs_tol = 1e-16);

/// Same series summed directly for any t > 0, without the transformation.
double theta_direct(double t, double abs_tol = 1e-16);

/// Number of series terms used by theta_direct: the smallest n with
/// exp(-pi n^2 t) < abs_tol (1 - exp(-pi t)).
int theta_truncation(double t, double abs_tol);

namespace detail {
/// Series route for K: pi/2 (I_{-v} - I_v) / sin(pi v). Invalid at integer order.
ComplexPoint bessel_k_series(ComplexPoint order, double y, const AccuracyBudget& budget);
/// Trapezoidal rule on K_v(y) = int_0^inf exp(-y cosh u) cosh(v u) du.
ComplexPoint bessel_k_integral(ComplexPoint order, double y, const AccuracyBudget& budget);
/// Legendre continued fraction for Gamma(s, x).
ComplexPoint incomplete_gamma_cf(ComplexPoint s, double x, const AccuracyBudget& budget);
/// Gamma(s) - gamma(s, x) using the lower-gamma power series.
ComplexPoint incomplete_gamma_series(ComplexPoint s, double x, const AccuracyBudget& budget);
}  // namespace detail

}  // namespace lfl
