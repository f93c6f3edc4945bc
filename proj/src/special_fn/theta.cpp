#include <cmath>

#include "lfl/special_fn.hpp"

namespace lfl {

int theta_truncation(double t, double abs_tol) {
  if (!(t > 0.0)) throw DomainError("theta: t must be > 0");
  // The tail after n is at most e^{-pi n^2 t} / (1 - e^{-pi t}).
  const double target = abs_tol * -std::expm1(-kPi * t);
  int n = 1;
  while (std::exp(-kPi * n * n * t) >= target) ++n;
  return n;
}

double theta_direct(double t, double abs_tol) {
  const int n_max = theta_truncation(t, abs_tol);
  double sum = 0.0;
  // Smallest terms first.
  for (int n = n_max; n >= 1; --n) sum += std::exp(-kPi * n * n * t);
  return 0.5 + sum;
}

double theta(double t, double abs_tol) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("theta: t must be > 0");
  if (t >= 1.0) return theta_direct(t, abs_tol);
  return theta_direct(1.0 / t, abs_tol) / std::sqrt(t);
}

}  // namespace lfl
