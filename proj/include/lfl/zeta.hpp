#pragma once

// Completed zeta xi(s) = pi^{-s/2} Gamma(s/2) zeta(s) from its theta-integral
// representation, plus an independent half-plane evaluator and the probes
// built on them (G-factor, convexity, scattering ratio).

#include "lfl/core.hpp"
#include "lfl/report.hpp"

namespace lfl {

struct XiValue {
  ComplexPoint value;
  double attained_error = 0.0;
};

/// xi(s) for every s off the poles {0, 1}. Each term of
///   sum_{n>=1} [(pi n^2)^{-s/2} Gamma(s/2, pi n^2)
///             + (pi n^2)^{-(1-s)/2} Gamma((1-s)/2, pi n^2)] - 1/s - 1/(1-s)
/// is the integral over [1, inf) of one theta-series term; the tail after n
/// is O(exp(-pi n^2)).
XiValue xi(ComplexPoint s, double abs_tol = 1e-15);

/// zeta(s) = xi(s) pi^{s/2} / Gamma(s/2). Trivial zeros are returned as
/// exact zeros and zeta(0) = -1/2. The absolute error grows like
/// e^{pi |Im s| / 4} times that of xi; prefer zeta_halfplane for |Im s| > 30.
ComplexPoint zeta(ComplexPoint s);

/// Independent evaluator on Re s > 0:
///   zeta(s) = 1/(s-1) + sum_{n<=N} int_n^{n+1} (n^{-s} - x^{-s}) dx + tail,
/// with the tail from Euler-Maclaurin at N+1. Throws BudgetExceeded when the
/// remainder estimate exceeds abs_tol (N too small for this s).
ComplexPoint zeta_halfplane(ComplexPoint s, int N, double abs_tol = 1e-10);

/// Remainder estimate that zeta_halfplane would attain at (s, N).
double zeta_halfplane_error(ComplexPoint s, int N);

/// G(s) = pi^{(s-1)/2} Gamma((1-s)/2) / (pi^{-s/2} Gamma(s/2)), so that
/// zeta(s) = G(s) zeta(1-s). Zero at s = 0, -2, -4, ...; poles at s = 1, 3, 5, ...
ComplexPoint g_factor(ComplexPoint s);

struct ConvexityProbe {
  VerificationReport report;
  double sup_ratio = 0.0;     ///< sup_t |zeta(1/2+it)| / (2+t)^{1/4+eps}
  double t_at_sup = 0.0;
  double min_line_one = 0.0;  ///< min_t |zeta(1+it)| over t > 0 on the grid
  double t_at_min = 0.0;
};

/// Sweep t in [0, t_max] (step t_step) along Re s = 1/2 and Re s = 1. The
/// probe passes when the sup is finite and the minimum on the 1-line is
/// positive; the sizes themselves are reported, not asserted.
ConvexityProbe convexity_probe(double t_max, double eps, double t_step = 0.1);

/// r(s) = xi(s) / xi(s+1).
ComplexPoint scattering_ratio(ComplexPoint s);

namespace detail {
/// Euler-Maclaurin estimate of sum_{j>=0} (w+j)^{-s} - w^{1-s}/(s-1) for
/// w >> |s|; *error receives the size of the first omitted correction.
ComplexPoint euler_maclaurin_tail(ComplexPoint s, double w, double* error);
}  // namespace detail

}  // namespace lfl
