#include <cmath>
#include <limits>

#include "lfl/special_fn.hpp"

namespace lfl {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;

// x^s e^{-x}, formed in the exponent so large x underflows cleanly to 0.
ComplexPoint power_exp(ComplexPoint s, double x) { return std::exp(s * std::log(x) - x); }

}  // namespace

namespace detail {

ComplexPoint incomplete_gamma_cf(ComplexPoint s, double x, const AccuracyBudget& budget) {
  // Modified Lentz evaluation of
  //   Gamma(s,x) = x^s e^{-x} / (x+1-s - 1(1-s)/(x+3-s - 2(2-s)/(x+5-s - ...)))
  ComplexPoint b = x + 1.0 - s;
  ComplexPoint c = 1.0 / kTiny;
  ComplexPoint d = 1.0 / b;
  ComplexPoint h = d;
  double change = 1.0;
  for (int i = 1; i <= budget.series_terms_max; ++i) {
    const ComplexPoint an = -static_cast<double>(i) * (static_cast<double>(i) - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const ComplexPoint delta = d * c;
    h *= delta;
    change = std::abs(delta - 1.0);
    if (change < 2.0 * kEps) return power_exp(s, x) * h;
  }
  throw BudgetExceeded("upper_incomplete_gamma: continued fraction did not converge",
                       change * std::abs(power_exp(s, x) * h));
}

ComplexPoint incomplete_gamma_series(ComplexPoint s, double x, const AccuracyBudget& budget) {
  // gamma(s,x) = x^s e^{-x} sum_{n>=0} x^n / (s (s+1) ... (s+n))
  ComplexPoint denom = s;
  ComplexPoint term = 1.0 / s;
  ComplexPoint sum = term;
  int n = 0;
  for (; n < budget.series_terms_max; ++n) {
    denom += 1.0;
    term *= x / denom;
    sum += term;
    if (std::abs(term) < kEps * std::abs(sum) && std::abs(denom) > x) break;
  }
  if (n == budget.series_terms_max) {
    throw BudgetExceeded("upper_incomplete_gamma: series did not converge",
                         std::abs(term * power_exp(s, x)));
  }
  return gamma(s) - sum * power_exp(s, x);
}

}  // namespace detail

ComplexPoint upper_incomplete_gamma(ComplexPoint s, double x, const AccuracyBudget& budget) {
  require_finite(s, "upper_incomplete_gamma");
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("upper_incomplete_gamma: x must be > 0");
  if (x >= std::abs(s) + 1.0) return detail::incomplete_gamma_cf(s, x, budget);
  // Near a pole of Gamma(s) the series route cancels two large terms; the
  // continued fraction is pole-free but slow for small x.
  const bool near_pole = near_nonpositive_integer(s, 0.1) <= 0;
  const bool at_pole = near_nonpositive_integer(s, 1e-8) <= 0;
  if (at_pole || (near_pole && x >= 0.25)) return detail::incomplete_gamma_cf(s, x, budget);
  return detail::incomplete_gamma_series(s, x, budget);
}

}  // namespace lfl
