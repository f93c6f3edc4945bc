#include "lfl/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "lfl/quadrature.hpp"

namespace lfl {

ComplexPoint homogeneous_tail(const std::function<ComplexPoint(double, double)>& angular,
                              ComplexPoint p, double B) {
  if (!(p.real() > 2.0)) throw DomainError("homogeneous_tail: needs Re p > 2");
  // In polar form: int dt angular(t) int_{r_b(t)}^inf r^{1-p} dr
  //              = int dt angular(t) r_b(t)^{2-p} / (p - 2),
  // with r_b(t) = B / max(|cos t|, |sin t|), smooth between multiples of pi/4.
  const auto integrand = [&](double t) -> ComplexPoint {
    const double c = std::cos(t);
    const double s = std::sin(t);
    const double rb = B / std::max(std::abs(c), std::abs(s));
    return angular(c, s) * std::exp((2.0 - p) * std::log(rb));
  };
  ComplexPoint total{0.0, 0.0};
  for (int k = 0; k < 8; ++k) {
    total += quad::composite_gauss_legendre(integrand, k * kPi / 4, (k + 1) * kPi / 4, 4);
  }
  return total / (p - 2.0);
}

}  // namespace lfl
