#include <cmath>
#include <limits>
#include <ostream>

#include "lfl/lattice.hpp"
#include "lfl/modular_forms.hpp"
#include "lfl/primes.hpp"
#include "lfl/zeta.hpp"

namespace lfl {

QExpansion::QExpansion(double weight, double period, int multiplier,
                       std::vector<ComplexPoint> coeffs, GrowthBound growth,
                       std::vector<Int128> exact)
    : weight_(weight),
      period_(period),
      multiplier_(multiplier),
      coeffs_(std::move(coeffs)),
      growth_(growth),
      exact_(std::move(exact)) {
  if (!(weight_ > 0.0) || !(period_ > 0.0)) throw DomainError("QExpansion: weight and period must be positive");
  if (multiplier_ != 1 && multiplier_ != -1) throw DomainError("QExpansion: multiplier must be +-1");
  if (coeffs_.size() < 2) throw DomainError("QExpansion: truncation order must be >= 1");
  if (!exact_.empty() && exact_.size() != coeffs_.size()) {
    throw DomainError("QExpansion: exact coefficient table has the wrong length");
  }
  if (!(growth_.K >= 0.0) || !(growth_.d >= 0.0)) throw DomainError("QExpansion: invalid growth bound");
}

UnimodularMatrix::UnimodularMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
  if (static_cast<Int128>(a) * d - static_cast<Int128>(b) * c != 1) {
    throw DomainError("UnimodularMatrix: determinant must be 1");
  }
}

ComplexPoint UnimodularMatrix::apply(ComplexPoint tau) const {
  return (static_cast<double>(a_) * tau + static_cast<double>(b_)) /
         (static_cast<double>(c_) * tau + static_cast<double>(d_));
}

Int128 divisor_sigma(int t, std::uint64_t n) {
  if (n == 0) throw DomainError("divisor_sigma: n must be positive");
  if (t < 0) throw DomainError("divisor_sigma: exponent must be non-negative");
  // Multiplicative: sigma_t(p^e) = 1 + p^t + ... + p^{et}.
  Int128 result = 1;
  for (const auto& [p, e] : factorize(n)) {
    Int128 pt = 1;
    for (int i = 0; i < t; ++i) pt = checked_mul_add(pt, static_cast<Int128>(p), 0);
    Int128 term = 1;
    Int128 local = 1;
    for (int i = 0; i < e; ++i) {
      term = checked_mul_add(term, pt, 0);
      local += term;
    }
    result = checked_mul_add(result, local, 0);
  }
  return result;
}

QExpansion eisenstein_gk_q_expansion(int k, std::size_t M) {
  if (k < 4 || k % 2 != 0) throw DomainError("eisenstein_gk_q_expansion: k must be even and >= 4");
  if (M < 1) throw DomainError("eisenstein_gk_q_expansion: M must be positive");
  // 2 (2 pi i)^k / (k-1)! with i^k = +-1 for even k.
  const double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
  const double scale = sign * 2.0 * std::exp(k * std::log(kTwoPi) - std::lgamma(static_cast<double>(k)));
  std::vector<ComplexPoint> coeffs(M + 1);
  coeffs[0] = 2.0 * zeta(ComplexPoint(k, 0.0)).real();
  for (std::size_t n = 1; n <= M; ++n) {
    // sigma_{k-1}(n) in floating point: exact integers overflow for large k.
    double s = 0.0;
    for (std::size_t d = 1; d * d <= n; ++d) {
      if (n % d != 0) continue;
      s += std::pow(static_cast<double>(d), k - 1);
      const std::size_t e = n / d;
      if (e != d) s += std::pow(static_cast<double>(e), k - 1);
    }
    coeffs[n] = scale * s;
  }
  // sigma_{k-1}(n) <= zeta(k-1) n^{k-1}.
  const double K = std::abs(scale) * zeta(ComplexPoint(k - 1, 0.0)).real();
  return QExpansion(k, 1.0, static_cast<int>(sign), std::move(coeffs), GrowthBound{K, k - 1.0});
}

QExpansion theta_q_expansion(std::size_t M) {
  if (M < 1) throw DomainError("theta_q_expansion: M must be positive");
  std::vector<ComplexPoint> coeffs(M + 1, 0.0);
  coeffs[0] = 0.5;
  for (std::size_t m = 1; m * m <= M; ++m) coeffs[m * m] = 1.0;
  return QExpansion(0.5, 2.0, 1, std::move(coeffs), GrowthBound{1.0, 0.0});
}

double tail_bound(const QExpansion& f, double im_tau) {
  if (!(im_tau > 0.0)) throw DomainError("tail_bound: requires Im tau > 0");
  const auto M = static_cast<double>(f.truncation());
  const auto [K, d] = f.growth();
  // Consecutive-term ratio of K n^d |q|^n is largest at n = M + 1.
  const double log_q = -kTwoPi * im_tau / f.period();
  const double log_r = log_q + d * std::log((M + 2.0) / (M + 1.0));
  if (log_r >= 0.0) return std::numeric_limits<double>::infinity();
  const double log_first = std::log(K) + d * std::log(M + 1.0) + (M + 1.0) * log_q;
  return std::exp(log_first) / -std::expm1(log_r);
}

QEvaluation evaluate(const QExpansion& f, ComplexPoint tau, double abs_tol) {
  require_finite(tau, "evaluate");
  if (!(tau.imag() > 0.0)) throw DomainError("evaluate: requires Im tau > 0");
  const double bound = tail_bound(f, tau.imag());
  if (!(bound <= abs_tol)) throw BudgetExceeded("evaluate: truncation too short for Im tau", bound);
  const ComplexPoint q = std::exp(kTwoPi * kI * tau / f.period());
  const auto coeffs = f.coeffs();
  ComplexPoint value{0.0, 0.0};
  for (std::size_t n = coeffs.size(); n-- > 0;) value = value * q + coeffs[n];
  return {value, bound};
}

double modularity_check(const QExpansion& f, const UnimodularMatrix& gamma, ComplexPoint tau) {
  require_finite(tau, "modularity_check");
  if (!(tau.imag() > 0.0)) throw DomainError("modularity_check: requires Im tau > 0");
  const double k = f.weight();
  const bool is_s = gamma.a() == 0 && gamma.b() == -1 && gamma.c() == 1 && gamma.d() == 0;
  ComplexPoint factor;
  if (is_s) {
    factor = static_cast<double>(f.multiplier()) * std::pow(tau / kI, k);
  } else if (gamma.c() == 0 && gamma.d() == 1) {
    factor = 1.0;
  } else if (f.has_integer_weight()) {
    factor = std::pow(static_cast<double>(gamma.c()) * tau + static_cast<double>(gamma.d()),
                      static_cast<int>(k));
  } else {
    throw DomainError("modularity_check: non-integer weight supports only S and translations");
  }
  const double inf = std::numeric_limits<double>::infinity();
  const QEvaluation lhs = evaluate(f, gamma.apply(tau), inf);
  const QEvaluation rhs = evaluate(f, tau, inf);
  return std::abs(lhs.value - factor * rhs.value) + lhs.tail_bound + std::abs(factor) * rhs.tail_bound;
}

LatticeSum eisenstein_gk_lattice(int k, ComplexPoint tau, int R) {
  if (k < 4 || k % 2 != 0) throw DomainError("eisenstein_gk_lattice: k must be even and >= 4");
  if (!(tau.imag() > 0.0)) throw DomainError("eisenstein_gk_lattice: requires Im tau > 0");
  if (R < 1) throw DomainError("eisenstein_gk_lattice: R must be positive");
  // Sum rows m = 0..R (m < 0 doubles m > 0 since k is even), small terms first.
  ComplexPoint sum{0.0, 0.0};
  for (int m = R; m >= 0; --m) {
    ComplexPoint row{0.0, 0.0};
    for (int n = R; n >= 1; --n) {
      const ComplexPoint w = static_cast<double>(m) * tau;
      row += std::pow(w + static_cast<double>(n), -k) + std::pow(w - static_cast<double>(n), -k);
    }
    if (m > 0) row += std::pow(static_cast<double>(m) * tau, -k);
    sum += (m == 0 ? 1.0 : 2.0) * row;
  }
  const auto angular = [&](double c, double s) { return std::pow(c * tau + s, -k); };
  const ComplexPoint tail = homogeneous_tail(angular, ComplexPoint(k, 0.0), R + 0.5);
  return {sum + tail, tail};
}

void write_coefficients_csv(std::ostream& out, const QExpansion& f, std::size_t rows) {
  if (!f.has_exact()) throw DomainError("write_coefficients_csv: exact coefficients required");
  if (rows > f.truncation()) throw DomainError("write_coefficients_csv: more rows than coefficients");
  const double half = (f.weight() - 1.0) / 2.0;
  out << "# a_n exact integer coefficient; normalized = a_n / n^" << half << "\n";
  out << "n,a_n,normalized\n";
  const auto exact = f.exact();
  char buf[64];
  for (std::size_t n = 1; n <= rows; ++n) {
    const double normalized = static_cast<double>(exact[n]) / std::pow(static_cast<double>(n), half);
    std::snprintf(buf, sizeof buf, "%.15g", normalized);
    out << n << ',' << to_string(exact[n]) << ',' << buf << '\n';
  }
}

}  // namespace lfl
