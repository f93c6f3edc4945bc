#include "lfl/hecke_l.hpp"

#include <cmath>
#include <sstream>

#include "lfl/primes.hpp"
#include "lfl/special_fn.hpp"

namespace lfl {
namespace {

std::string format_point(ComplexPoint s) {
  std::ostringstream out;
  out.precision(6);
  out << "s=" << s.real() << (s.imag() < 0 ? "-" : "+") << std::abs(s.imag()) << "i";
  return out.str();
}

// x^{-s} Gamma(s, x) for real x > 0.
ComplexPoint scaled_upper_gamma(ComplexPoint s, double x) {
  return std::exp(-s * std::log(x)) * upper_incomplete_gamma(s, x);
}

// Bound on |x^{-s} Gamma(s, x)| valid for x > max(Re s - 1, 0):
//   Gamma(s, x) = x^s e^{-x} int_0^inf e^{-xu} (1+u)^{s-1} du.
double scaled_upper_gamma_bound(ComplexPoint s, double x) {
  const double excess = std::max(s.real() - 1.0, 0.0);
  if (x <= excess) return std::numeric_limits<double>::infinity();
  return std::exp(-x) / (x - excess);
}

// The Phi series for coefficients `a` (a_0 at index 0).
ComplexPoint phi_series(ComplexPoint s, std::span<const ComplexPoint> a, double k, double lambda,
                        int C, GrowthBound growth, double abs_tol) {
  require_finite(s, "phi_completed");
  const bool has_constant = a[0] != ComplexPoint(0.0, 0.0);
  if (has_constant && (std::abs(s) == 0.0 || s == ComplexPoint(k, 0.0))) {
    throw PoleError("phi_completed: pole at s = 0 or s = k");
  }
  const ComplexPoint s_dual = k - s;
  ComplexPoint sum{0.0, 0.0};
  const double step = kTwoPi / lambda;
  bool converged = false;
  for (std::size_t n = 1; n < a.size(); ++n) {
    const double x = step * static_cast<double>(n);
    // Remainder of n' >= n, each term bounded by K n'^d (b(s) + b(k-s)); the
    // bound's ratio between consecutive n' is below 1/2 once x > d + 2.
    const double nd = growth.K * std::pow(static_cast<double>(n), growth.d);
    const double term_bound = nd * (scaled_upper_gamma_bound(s, x) + scaled_upper_gamma_bound(s_dual, x));
    if (x > growth.d + 2.0 && 2.0 * term_bound < abs_tol &&
        std::exp(-step) * std::pow(1.0 + 1.0 / n, growth.d) < 0.5) {
      converged = true;
      break;
    }
    if (a[n] == ComplexPoint(0.0, 0.0)) continue;
    sum += a[n] * (scaled_upper_gamma(s, x) + static_cast<double>(C) * scaled_upper_gamma(s_dual, x));
  }
  if (!converged) {
    throw BudgetExceeded("phi_completed: q-expansion truncated before the series converged", abs_tol);
  }
  if (has_constant) sum -= a[0] / s + static_cast<double>(C) * a[0] / s_dual;
  return sum;
}

}  // namespace

ComplexPoint LSeriesDescriptor::normalized(std::size_t n) const {
  if (n == 0 || n >= coeffs.size()) throw DomainError("LSeriesDescriptor: index out of range");
  return coeffs[n] / std::pow(static_cast<double>(n), (weight - 1.0) / 2.0);
}

void LSeriesDescriptor::validate() const {
  if (coeffs.size() < 2 || !(weight > 0.0) || !(period > 0.0) || conductor == 0) {
    throw DomainError("LSeriesDescriptor: malformed descriptor");
  }
  if (multiplier != 1 && multiplier != -1) throw DomainError("LSeriesDescriptor: multiplier must be +-1");
  if (sign && std::abs(std::abs(*sign) - 1.0) > 1e-12) {
    throw DomainError("LSeriesDescriptor: sign must have unit modulus");
  }
}

LSeriesDescriptor describe(const QExpansion& f) {
  LSeriesDescriptor d;
  d.coeffs.assign(f.coeffs().begin(), f.coeffs().end());
  d.weight = f.weight();
  d.period = f.period();
  d.multiplier = f.multiplier();
  if (f.has_integer_weight()) d.gamma_shifts = {(f.weight() - 1.0) / 2.0, (f.weight() + 1.0) / 2.0};
  d.conductor = 1;
  d.sign = ComplexPoint(f.multiplier(), 0.0);
  d.growth = f.growth();
  return d;
}

ComplexPoint phi_completed(ComplexPoint s, const LSeriesDescriptor& f, double abs_tol) {
  f.validate();
  return phi_series(s, f.coeffs, f.weight, f.period, f.multiplier, f.growth, abs_tol);
}

ComplexPoint phi_completed(ComplexPoint s, const QExpansion& f, double abs_tol) {
  return phi_series(s, f.coeffs(), f.weight(), f.period(), f.multiplier(), f.growth(), abs_tol);
}

ComplexPoint phi_dirichlet(ComplexPoint s, const QExpansion& f, std::size_t N) {
  if (N > f.truncation()) throw DomainError("phi_dirichlet: N exceeds the truncation order");
  ComplexPoint sum{0.0, 0.0};
  for (std::size_t n = N; n >= 1; --n) {
    if (f.a(n) == ComplexPoint(0.0, 0.0)) continue;
    sum += f.a(n) * std::exp(-s * std::log(static_cast<double>(n)));
  }
  const ComplexPoint scale = std::exp(-s * std::log(kTwoPi / f.period()) + log_gamma(s));
  return scale * sum;
}

namespace {

void require_normalizable(const QExpansion& f, std::size_t X) {
  if (X < 1 || X > f.truncation()) throw DomainError("Euler product: X must lie in [1, M]");
  if (f.a(1) == ComplexPoint(0.0, 0.0)) throw DomainError("Euler product: a_1 must be non-zero");
  if (!f.has_integer_weight()) throw DomainError("Euler product: integer weight only");
}

ComplexPoint normalized_coeff(const QExpansion& f, std::size_t n) {
  return f.a(n) / f.a(1) / std::pow(static_cast<double>(n), (f.weight() - 1.0) / 2.0);
}

}  // namespace

ComplexPoint normalized_dirichlet_partial(const QExpansion& f, ComplexPoint s, std::size_t X) {
  require_normalizable(f, X);
  ComplexPoint sum{0.0, 0.0};
  for (std::size_t n = X; n >= 1; --n) {
    sum += normalized_coeff(f, n) * std::exp(-s * std::log(static_cast<double>(n)));
  }
  return sum;
}

ComplexPoint normalized_euler_partial(const QExpansion& f, ComplexPoint s, std::size_t X) {
  require_normalizable(f, X);
  ComplexPoint product{1.0, 0.0};
  for (const std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(X))) {
    const ComplexPoint ps = std::exp(-s * std::log(static_cast<double>(p)));
    product /= 1.0 - normalized_coeff(f, p) * ps + ps * ps;
  }
  return product;
}

VerificationReport euler_product_check(const QExpansion& f, ComplexPoint s, std::size_t X,
                                       double tolerance) {
  if (!(s.real() > 1.5)) throw DomainError("euler_product_check: requires Re s > 3/2");
  VerificationReport report("euler-product", format_point(s) + " X=" + std::to_string(X), tolerance);
  const ComplexPoint gap = normalized_dirichlet_partial(f, s, X) - normalized_euler_partial(f, s, X);
  report.record("X=" + std::to_string(X), std::abs(gap));
  return report;
}

VerificationReport weil_twist_check(const QExpansion& f, const DirichletCharacter& chi,
                                    ComplexPoint s, double tolerance) {
  if (!f.has_integer_weight()) throw DomainError("weil_twist_check: integer weight only");
  if (f.period() != 1.0) throw DomainError("weil_twist_check: level-one forms only");
  if (!chi.is_primitive()) throw DomainError("weil_twist_check: chi must be primitive");
  const double k = f.weight();
  if (!(s.real() > (k + 1.0) / 2.0 + 0.5)) {
    throw DomainError("weil_twist_check: Re s must lie in the absolute-convergence region");
  }
  const std::uint32_t r = chi.modulus();
  VerificationReport report("weil-twist", "r=" + std::to_string(r) + " " + format_point(s), tolerance);

  // Left: direct Dirichlet series.
  ComplexPoint dirichlet{0.0, 0.0};
  for (std::size_t n = f.truncation(); n >= 1; --n) {
    const ComplexPoint c = chi(static_cast<std::int64_t>(n));
    if (c == ComplexPoint(0.0, 0.0) || f.a(n) == ComplexPoint(0.0, 0.0)) continue;
    dirichlet += f.a(n) * c * std::exp(-s * std::log(static_cast<double>(n)));
  }
  const ComplexPoint lhs = std::exp(-s * std::log(kTwoPi) + log_gamma(s)) * dirichlet;

  // Right: split integral at y = 1/r, each half term-wise.
  const auto split = [&](ComplexPoint z, const DirichletCharacter& x) {
    const double step = kTwoPi / r;
    ComplexPoint sum{0.0, 0.0};
    for (std::size_t n = 1; n <= f.truncation(); ++n) {
      const double arg = step * static_cast<double>(n);
      const double bound = f.growth().K * std::pow(static_cast<double>(n), f.growth().d) *
                           std::pow(static_cast<double>(r), -z.real()) * scaled_upper_gamma_bound(z, arg);
      if (arg > f.growth().d + 2.0 && bound < 1e-20) return sum;
      const ComplexPoint c = x(static_cast<std::int64_t>(n));
      if (c == ComplexPoint(0.0, 0.0)) continue;
      // (2 pi n)^{-z} Gamma(z, 2 pi n / r) = r^{-z} (2 pi n / r)^{-z} Gamma(z, .)
      sum += f.a(n) * c * std::exp(-z * std::log(static_cast<double>(r))) * scaled_upper_gamma(z, arg);
    }
    throw BudgetExceeded("weil_twist_check: q-expansion too short for the split integral", 1.0);
  };
  const ComplexPoint g = gauss_sum(chi);
  const ComplexPoint ik = std::pow(kI, static_cast<int>(k));
  const ComplexPoint w = ik * g * g;
  const ComplexPoint rpow = std::exp((k - 2.0 * s - 1.0) * std::log(static_cast<double>(r)));
  const ComplexPoint rhs = split(s, chi) + w * rpow * split(k - s, chi.conjugate());
  report.record(format_point(s), std::abs(lhs - rhs));
  return report;
}

}  // namespace lfl
