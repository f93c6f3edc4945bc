#include "lfl/tate.hpp"

#include <cmath>

#include "lfl/primes.hpp"
#include "lfl/quadrature.hpp"
#include "lfl/special_fn.hpp"

namespace lfl {

std::pair<ComplexPoint, ComplexPoint> local_factor_p(std::uint64_t p, ComplexPoint s, int K) {
  require_finite(s, "local_factor_p");
  if (!is_prime(p)) throw DomainError("local_factor_p: p must be prime");
  if (!(s.real() > 0.0)) throw DomainError("local_factor_p: requires Re s > 0");
  if (K < 0) throw DomainError("local_factor_p: K must be non-negative");
  const ComplexPoint ratio = std::exp(-s * std::log(static_cast<double>(p)));
  ComplexPoint power = 1.0;
  ComplexPoint sum{0.0, 0.0};
  for (int k = 0; k <= K; ++k) {
    sum += power;
    power *= ratio;
  }
  return {sum, 1.0 / (1.0 - ratio)};
}

std::pair<ComplexPoint, ComplexPoint> archimedean_factor(ComplexPoint s) {
  require_finite(s, "archimedean_factor");
  if (s.real() < 0.2 || s.real() > 6.0) {
    throw DomainError("archimedean_factor: requires 0.2 <= Re s <= 6");
  }
  // Even integrand: 2 int_0^inf e^{-pi x^2} x^{s-1} dx, singular at 0 for Re s < 1.
  const auto integrand = [s](double x) -> ComplexPoint {
    return 2.0 * std::exp(-kPi * x * x + (s - 1.0) * std::log(x));
  };
  const auto quad = quad::half_line_singular(integrand, 1e-13);
  const ComplexPoint closed = std::exp(-0.5 * s * std::log(kPi) + log_gamma(0.5 * s));
  return {quad.value, closed};
}

ComplexPoint euler_product_partial(ComplexPoint s, std::uint32_t X) {
  require_finite(s, "euler_product_partial");
  if (!(s.real() > 1.0)) throw DomainError("euler_product_partial: requires Re s > 1");
  if (X < 2) throw DomainError("euler_product_partial: requires X >= 2");
  ComplexPoint product = 1.0;
  for (const std::uint32_t p : primes_up_to(X)) {
    product /= 1.0 - std::exp(-s * std::log(static_cast<double>(p)));
  }
  return product;
}

}  // namespace lfl
