#pragma once

// Thin wrappers over Boost.Math quadrature used by the evaluators.

#include <complex>
#include <functional>

namespace lfl::quad {

struct Result {
  std::complex<double> value;
  double error_estimate = 0.0;
};

/// Composite 20-point Gauss-Legendre over `panels` uniform panels of [a, b].
std::complex<double> composite_gauss_legendre(const std::function<std::complex<double>(double)>& f,
                                              double a, double b, int panels);

/// Adaptive Gauss-Kronrod (7/15) on a finite interval with smooth integrand.
Result adaptive(const std::function<double(double)>& f, double a, double b, double tol);

/// Integral over (0, inf) of a function that may have an integrable
/// singularity at 0: tanh-sinh on (0, 1], exp-sinh on [1, inf). Real and
/// imaginary parts are integrated separately.
Result half_line_singular(const std::function<std::complex<double>(double)>& f, double tol);

}  // namespace lfl::quad
