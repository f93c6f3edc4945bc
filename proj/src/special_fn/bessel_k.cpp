#include <algorithm>
#include <cmath>
#include <limits>

#include "lfl/special_fn.hpp"

namespace lfl {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// I_v(y) = sum_m (y/2)^{v+2m} / (m! Gamma(v+m+1)).
ComplexPoint bessel_i_series(ComplexPoint order, double y, int max_terms) {
  const double half = 0.5 * y;
  ComplexPoint term = std::exp(order * std::log(half)) * rgamma(order + 1.0);
  ComplexPoint sum = term;
  for (int m = 1; m < max_terms; ++m) {
    term *= half * half / (static_cast<double>(m) * (order + static_cast<double>(m)));
    sum += term;
    if (std::abs(term) <= kEps * std::abs(sum) && m > std::abs(order)) return sum;
  }
  throw BudgetExceeded("bessel_k: I-series did not converge", std::abs(term));
}

}  // namespace

namespace detail {

ComplexPoint bessel_k_series(ComplexPoint order, double y, const AccuracyBudget& budget) {
  const ComplexPoint sine = std::sin(kPi * order);
  if (std::abs(sine) < 1e-3) throw DomainError("bessel_k_series: order too close to an integer");
  const ComplexPoint i_minus = bessel_i_series(-order, y, budget.series_terms_max);
  const ComplexPoint i_plus = bessel_i_series(order, y, budget.series_terms_max);
  return 0.5 * kPi * (i_minus - i_plus) / sine;
}

ComplexPoint bessel_k_integral(ComplexPoint order, double y, const AccuracyBudget& budget) {
  // Trapezoidal rule in u with the factor e^{-y} pulled out. The integrand is
  // entire and decays double-exponentially, so the rule converges
  // geometrically in 1/h; the step also resolves the e^{-y u^2/2} peak.
  const double h = std::min(0.1, 0.6 / std::sqrt(y));
  const double re = std::abs(order.real());
  const double peak = std::asinh(re / y);
  auto bound = [&](double u) { return -y * (std::cosh(u) - 1.0) + re * u; };
  const double log_max = bound(peak);
  ComplexPoint sum = 0.5;  // f(0) / 2, cosh(0) = 1
  for (int j = 1; j <= budget.series_terms_max; ++j) {
    const double u = j * h;
    const double log_b = bound(u);
    sum += std::exp(-y * (std::cosh(u) - 1.0)) * std::cosh(order * u);
    if (u > peak && log_b - log_max < -42.0) {
      return h * std::exp(-y) * sum;
    }
  }
  throw BudgetExceeded("bessel_k: integral did not reach its tail", 0.0);
}

}  // namespace detail

ComplexPoint bessel_k(ComplexPoint order, double y, const AccuracyBudget& budget) {
  require_finite(order, "bessel_k");
  if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("bessel_k: y must be > 0");
  const double to_integer = std::abs(order - std::round(order.real()));
  if (y <= 1.0 && to_integer >= 0.05 && std::abs(order.imag()) <= 5.0) {
    return detail::bessel_k_series(order, y, budget);
  }
  return detail::bessel_k_integral(order, y, budget);
}

}  // namespace lfl
