#pragma once

// Satake parameters and the local factors built from them (symmetric and
// exterior powers, Rankin-Selberg), Sato-Tate statistics, the Ramanujan /
// Kim-Sarnak window and Sarnak's integrality argument.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "lfl/core.hpp"
#include "lfl/int128.hpp"
#include "lfl/report.hpp"

namespace lfl {

/// Local parameters alpha_{p,1..n} of a degree-n Euler factor at p.
struct SatakeData {
  std::uint64_t p = 2;
  std::vector<ComplexPoint> alphas;

  std::size_t degree() const { return alphas.size(); }
};

/// Roots of x^2 - a_p x + 1, ordered: |alpha| >= 1 first, ties broken by
/// Im alpha >= 0. Throws DomainError if p is not prime or a_p not finite.
SatakeData satake_from_ap(double a_p, std::uint64_t p);

/// Degree-one data alpha = 1 (the zeta factor).
SatakeData trivial_satake(std::uint64_t p);

/// prod_j (1 - m_j p^{-s})^{-1} over the given monomials.
ComplexPoint euler_factor(std::span<const ComplexPoint> monomials, std::uint64_t p, ComplexPoint s);

/// The standard factor prod_j (1 - alpha_j p^{-s})^{-1}.
ComplexPoint standard_local(const SatakeData& d, ComplexPoint s);

/// alpha^j beta^{k-j}, j = 0..k, for degree-2 data.
std::vector<ComplexPoint> sym_power_monomials(const SatakeData& d, int k);
/// Products alpha_{i_1} ... alpha_{i_k} over i_1 <= ... <= i_k.
std::vector<ComplexPoint> sym_power_monomials_gln(const SatakeData& d, int k);
/// Products alpha_{i_1} ... alpha_{i_k} over i_1 < ... < i_k (k <= n).
std::vector<ComplexPoint> ext_power_monomials(const SatakeData& d, int k);
/// alpha_j beta_k over all pairs; the primes must agree.
std::vector<ComplexPoint> rankin_selberg_monomials(const SatakeData& d1, const SatakeData& d2);

/// prod_{j=0}^{k} (1 - alpha^j beta^{k-j} p^{-s})^{-1} for degree-2 data.
ComplexPoint sym_power_local(const SatakeData& d, int k, ComplexPoint s);
ComplexPoint sym_power_local_gln(const SatakeData& d, int k, ComplexPoint s);
ComplexPoint ext_power_local(const SatakeData& d, int k, ComplexPoint s);
ComplexPoint rankin_selberg_local(const SatakeData& d1, const SatakeData& d2, ComplexPoint s);

/// Hecke eigenvalue at a prime: the exact integer (when known) and the
/// analytically normalized value.
struct PrimeCoefficient {
  std::uint32_t p = 2;
  double normalized = 0.0;
  std::optional<Int128> exact;
};

/// tau(p) and tau(p)/p^{11/2} for all primes p <= X (X <= 10^6).
std::vector<PrimeCoefficient> delta_prime_coefficients(std::uint32_t X);

/// (1/2 pi) int_{-2}^{2} x^m sqrt(4 - x^2) dx by quadrature, m <= 20.
double semicircle_moment(int m);

struct MomentRow {
  int m = 0;
  double empirical = 0.0;  ///< S_m(X) / pi(X)
  double target = 0.0;     ///< semicircle moment
};

struct HistogramBin {
  double center = 0.0;             ///< bin centre in theta
  double empirical_density = 0.0;  ///< count / (pi(X) * width)
  double target_density = 0.0;     ///< bin average of (2/pi) sin^2 theta
};

struct SatoTateResult {
  std::vector<MomentRow> moments;
  std::vector<HistogramBin> histogram;
  double discrepancy = 0.0;  ///< sqrt(sum (empirical - target)^2 width)
  std::size_t primes = 0;
  std::size_t out_of_range = 0;  ///< primes with |a_p| > 2 (skipped in the histogram)
  VerificationReport report;    ///< |S_m/pi(X) - M_m| for m = 0..m_max
};

/// Moments m = 0..m_max and a `bins`-bin histogram of theta_p = arccos(a_p/2)
/// over primes p <= X.
SatoTateResult sato_tate_report(std::span<const PrimeCoefficient> coeffs, std::uint32_t X, int m_max,
                                int bins, double tolerance = 0.3);

void write_moments_csv(std::ostream& out, const SatoTateResult& r);
void write_histogram_csv(std::ostream& out, const SatoTateResult& r);

struct RamanujanResult {
  VerificationReport report;  ///< residual max(0, |a_p| - 2) per prime, tolerance 0
  std::size_t violations = 0;
  double max_abs_ap = 0.0;
  double min_log_margin = 0.0;  ///< min over p of (7/64) log p - |log |alpha_p||
};

/// |a_p| <= 2 for p <= X (exactly a_p^2 <= 4 p^{k-1} when the exact value is
/// present), and the implied position of |alpha_p| inside the Kim-Sarnak
/// window [p^{-7/64}, p^{7/64}]. Violations are reported, not thrown.
RamanujanResult ramanujan_kim_sarnak_check(std::span<const PrimeCoefficient> coeffs, std::uint32_t X,
                                           int weight = 12);

/// P(x) = x^2 (4 - x^2)(x^2 - 1).
double sarnak_polynomial(double x);

struct SarnakResult {
  VerificationReport report;   ///< |int P d(mu_ST) - 1|; fails if P(n) > 0 for an integer n
  double semicircle_integral = 0.0;  ///< -M_6 + 5 M_4 - 4 M_2
  double normalized_average = 0.0;   ///< (1/pi(X)) sum P(a_p / p^{(k-1)/2})
  double integer_average = 0.0;      ///< (1/pi(X)) sum P(a_p) on the integers themselves
  std::size_t positive_integer_values = 0;
};

/// Sarnak's integrality argument: P(n) <= 0 on every integer (checked exactly
/// for the supplied integer coefficients), while the Sato-Tate average of P
/// is 1. The normalized average shows the empirical side of the contradiction.
SarnakResult sarnak_integrality_test(std::span<const PrimeCoefficient> coeffs, std::uint32_t X);

}  // namespace lfl
