#include "lfl/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/special_functions/bernoulli.hpp>

#include "lfl/special_fn.hpp"

namespace lfl {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kBernoulliTerms = 10;

// int_1^inf t^{a-1} e^{-x t} dt = x^{-a} Gamma(a, x)
ComplexPoint theta_term(ComplexPoint a, double x) {
  return std::exp(-a * std::log(x)) * upper_incomplete_gamma(a, x);
}

}  // namespace

namespace detail {

ComplexPoint euler_maclaurin_tail(ComplexPoint s, double w, double* error) {
  const ComplexPoint w_pow = std::exp(-s * std::log(w));
  ComplexPoint out = 0.5 * w_pow;
  ComplexPoint rising = s;  // s (s+1) ... (s+2k-2)
  double w_inv2k1 = 1.0 / w;
  double fact = 2.0;  // (2k)!
  ComplexPoint last{0.0, 0.0};
  for (int k = 1; k <= kBernoulliTerms + 1; ++k) {
    const ComplexPoint term =
        boost::math::bernoulli_b2n<double>(k) / fact * rising * w_pow * w_inv2k1;
    if (k == kBernoulliTerms + 1) {
      last = term;
      break;
    }
    out += term;
    rising *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
    w_inv2k1 /= w * w;
    fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
  }
  if (error) {
    const double sigma = s.real();
    const double scale =
        std::abs(s + static_cast<double>(2 * kBernoulliTerms + 1)) / (sigma + 2 * kBernoulliTerms + 1);
    *error = std::abs(last) * scale;
  }
  return out;
}

}  // namespace detail

XiValue xi(ComplexPoint s, double abs_tol) {
  require_finite(s, "xi");
  if (s == ComplexPoint(0.0, 0.0) || s == ComplexPoint(1.0, 0.0)) {
    throw PoleError("xi: pole at s = 0 or s = 1");
  }
  const ComplexPoint a = 0.5 * s;
  const ComplexPoint b = 0.5 * (1.0 - s);
  const double growth = 0.5 * (std::abs(s.real()) + std::abs(1.0 - s.real())) + 1.0;
  ComplexPoint sum{0.0, 0.0};
  double magnitude = 0.0;
  double tail = 0.0;
  for (int n = 1;; ++n) {
    const double x = kPi * n * n;
    const ComplexPoint term = theta_term(a, x) + theta_term(b, x);
    sum += term;
    magnitude += std::abs(term);
    // Bound for the remaining terms: e^{-x'} x'^{growth} at the next n.
    const double x_next = kPi * (n + 1) * (n + 1);
    tail = std::exp(-x_next + growth * std::log(x_next)) * 2.0;
    if (tail < 1e-3 * abs_tol || n > 200) break;
  }
  const ComplexPoint poles = 1.0 / s + 1.0 / (1.0 - s);
  const ComplexPoint value = sum - poles;
  const double roundoff = 8.0 * kEps * (magnitude + std::abs(1.0 / s) + std::abs(1.0 / (1.0 - s)));
  return {value, roundoff + tail};
}

ComplexPoint zeta(ComplexPoint s) {
  require_finite(s, "zeta");
  if (s == ComplexPoint(1.0, 0.0)) throw PoleError("zeta: pole at s = 1");
  if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real())) {
    const double r = s.real();
    if (r == 0.0) return {-0.5, 0.0};
    if (std::fmod(r, 2.0) == 0.0) return {0.0, 0.0};
  }
  const ComplexPoint value = xi(s).value * std::exp(0.5 * s * std::log(kPi)) * rgamma(0.5 * s);
  return s.imag() == 0.0 ? ComplexPoint(value.real(), 0.0) : value;
}

double zeta_halfplane_error(ComplexPoint s, int N) {
  double err = 0.0;
  detail::euler_maclaurin_tail(s, static_cast<double>(N + 1), &err);
  return err;
}

ComplexPoint zeta_halfplane(ComplexPoint s, int N, double abs_tol) {
  require_finite(s, "zeta_halfplane");
  if (!(s.real() > 0.0)) throw DomainError("zeta_halfplane: requires Re s > 0");
  if (s == ComplexPoint(1.0, 0.0)) throw PoleError("zeta_halfplane: pole at s = 1");
  if (N < 1) throw DomainError("zeta_halfplane: N must be positive");
  const double w = static_cast<double>(N + 1);
  double err = 0.0;
  const ComplexPoint tail = detail::euler_maclaurin_tail(s, w, &err);
  if (err > abs_tol) throw BudgetExceeded("zeta_halfplane: N too small for tolerance", err);
  // sum_{n<=N} int_n^{n+1} (n^{-s} - x^{-s}) dx = sum n^{-s} - ((N+1)^{1-s} - 1)/(1-s)
  ComplexPoint partial{0.0, 0.0};
  for (int n = N; n >= 1; --n) partial += std::exp(-s * std::log(static_cast<double>(n)));
  const ComplexPoint integral = (std::exp((1.0 - s) * std::log(w)) - 1.0) / (1.0 - s);
  return 1.0 / (s - 1.0) + (partial - integral) + tail;
}

ComplexPoint g_factor(ComplexPoint s) {
  require_finite(s, "g_factor");
  const ComplexPoint num_arg = 0.5 * (1.0 - s);
  const ComplexPoint den_arg = 0.5 * s;
  auto is_pole = [](ComplexPoint z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
  };
  if (is_pole(num_arg)) throw PoleError("g_factor: pole of Gamma((1-s)/2)");
  if (is_pole(den_arg)) return {0.0, 0.0};
  return std::exp((s - 0.5) * std::log(kPi) + log_gamma(num_arg) - log_gamma(den_arg));
}

ConvexityProbe convexity_probe(double t_max, double eps, double t_step) {
  if (!(t_max >= 0.0) || !(eps > 0.0) || !(t_step > 0.0)) {
    throw DomainError("convexity_probe: need t_max >= 0, eps > 0, t_step > 0");
  }
  if (t_max > 500.0) throw DomainError("convexity_probe: t_max is capped at 500");
  std::ostringstream grid;
  grid << "t in [0," << t_max << "] step " << t_step << ", exponent 1/4+" << eps;
  ConvexityProbe probe;
  probe.min_line_one = std::numeric_limits<double>::infinity();
  const int steps = static_cast<int>(std::floor(t_max / t_step + 1e-9));
  for (int j = 0; j <= steps; ++j) {
    const double t = j * t_step;
    const int N = std::max(50, static_cast<int>(3.0 * (t + 1.0)));
    const double ratio =
        std::abs(zeta_halfplane({0.5, t}, N, 1e-9)) / std::pow(2.0 + t, 0.25 + eps);
    if (ratio > probe.sup_ratio) {
      probe.sup_ratio = ratio;
      probe.t_at_sup = t;
    }
    if (t > 0.0) {
      const double line_one = std::abs(zeta_halfplane({1.0, t}, N, 1e-9));
      if (line_one < probe.min_line_one) {
        probe.min_line_one = line_one;
        probe.t_at_min = t;
      }
    }
  }
  std::ostringstream summary;
  summary << grid.str() << "; min|zeta(1+it)|=" << probe.min_line_one << " at t=" << probe.t_at_min;
  probe.report = VerificationReport("convexity-probe", summary.str(), 1e300);
  const bool ok = std::isfinite(probe.sup_ratio) && probe.min_line_one > 0.0;
  std::ostringstream at;
  at << "t=" << probe.t_at_sup;
  if (ok) {
    probe.report.record(at.str(), probe.sup_ratio);
  } else {
    probe.report.fail(at.str());
  }
  return probe;
}

ComplexPoint scattering_ratio(ComplexPoint s) {
  if (s == ComplexPoint(-1.0, 0.0)) throw PoleError("scattering_ratio: pole at s = -1");
  return xi(s).value / xi(s + 1.0).value;
}

}  // namespace lfl
