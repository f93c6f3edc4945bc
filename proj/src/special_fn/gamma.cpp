#include <cmath>

#include "lfl/special_fn.hpp"

namespace lfl {
namespace {

#include "lanczos_coefficients.inc"

const double kHalfLogTwoPi = 0.5 * std::log(kTwoPi);

// log Gamma(z) for Re z >= 1/2.
ComplexPoint lanczos_log_gamma(ComplexPoint z) {
  const ComplexPoint zm1 = z - 1.0;
  ComplexPoint series = kLanczosCoefficients[0];
  for (int k = 1; k < 15; ++k) series += kLanczosCoefficients[k] / (zm1 + static_cast<double>(k));
  const ComplexPoint t = zm1 + kLanczosG + 0.5;
  return kHalfLogTwoPi + (zm1 + 0.5) * std::log(t) - t + std::log(series);
}

bool is_pole(ComplexPoint s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

}  // namespace

ComplexPoint log_gamma(ComplexPoint s) {
  require_finite(s, "log_gamma");
  if (is_pole(s)) throw PoleError("log_gamma: pole at non-positive integer");
  if (s.real() >= 0.5) return lanczos_log_gamma(s);
  // Gamma(s) = Gamma(s + m) / (s (s+1) ... (s+m-1)). The sum of principal
  // logs continues the principal branch; on the negative real axis it gives
  // the limit from above, Im = -pi * (number of negative factors).
  const int m = static_cast<int>(std::ceil(0.5 - s.real()));
  ComplexPoint shift{0.0, 0.0};
  for (int j = 0; j < m; ++j) shift += std::log(s + static_cast<double>(j));
  return lanczos_log_gamma(s + static_cast<double>(m)) - shift;
}

ComplexPoint gamma(ComplexPoint s) {
  const ComplexPoint lg = log_gamma(s);
  if (lg.real() > 709.0) throw RangeError("gamma: overflow; use log_gamma");
  if (lg.real() < -745.0) throw RangeError("gamma: underflow; use log_gamma");
  ComplexPoint g = std::exp(lg);
  if (s.imag() == 0.0) g.imag(0.0);
  return g;
}

ComplexPoint rgamma(ComplexPoint s) {
  if (is_pole(s)) return {0.0, 0.0};
  const ComplexPoint lg = log_gamma(s);
  if (-lg.real() > 709.0) throw RangeError("rgamma: overflow");
  ComplexPoint r = std::exp(-lg);
  if (s.imag() == 0.0) r.imag(0.0);
  return r;
}

}  // namespace lfl
