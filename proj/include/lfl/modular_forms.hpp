#pragma once

// q-expansion arithmetic for modular forms on SL(2, Z) and the theta group:
// Ramanujan's Delta, holomorphic Eisenstein series G_k, evaluation with a
// certified tail bound, Hecke operators and point-wise modularity residuals.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "lfl/core.hpp"
#include "lfl/int128.hpp"

namespace lfl {

/// Coefficient growth cap |a_n| <= K n^d, used for tail bounds.
struct GrowthBound {
  double K = 1.0;
  double d = 0.0;
};

/// f(tau) = sum_{n=0}^{M} a_n exp(2 pi i n tau / period), a form of the given
/// weight with multiplier C = +-1 under tau -> -1/tau. Immutable.
class QExpansion {
 public:
  QExpansion(double weight, double period, int multiplier, std::vector<ComplexPoint> coeffs,
             GrowthBound growth, std::vector<Int128> exact = {});

  double weight() const { return weight_; }
  double period() const { return period_; }
  int multiplier() const { return multiplier_; }
  /// Truncation order M (coefficients a_0..a_M are stored).
  std::size_t truncation() const { return coeffs_.size() - 1; }
  std::span<const ComplexPoint> coeffs() const { return coeffs_; }
  ComplexPoint a(std::size_t n) const { return coeffs_.at(n); }
  /// Exact integer coefficients when the form has them (empty otherwise).
  std::span<const Int128> exact() const { return exact_; }
  bool has_exact() const { return !exact_.empty(); }
  GrowthBound growth() const { return growth_; }
  bool is_cusp_form() const { return coeffs_[0] == ComplexPoint(0.0, 0.0); }
  bool has_integer_weight() const { return weight_ == std::floor(weight_); }

 private:
  double weight_;
  double period_;
  int multiplier_;
  std::vector<ComplexPoint> coeffs_;
  GrowthBound growth_;
  std::vector<Int128> exact_;
};

/// An element of SL(2, Z).
class UnimodularMatrix {
 public:
  UnimodularMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  static UnimodularMatrix S() { return {0, -1, 1, 0}; }
  static UnimodularMatrix T(std::int64_t shift = 1) { return {1, shift, 0, 1}; }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t d() const { return d_; }

  ComplexPoint apply(ComplexPoint tau) const;

 private:
  std::int64_t a_, b_, c_, d_;
};

/// Ramanujan tau(0..M) (tau(0) = 0) in exact arithmetic, from
/// Delta = q * (prod (1 - q^n)^3)^8 with Jacobi's sparse series for the cube.
/// Results are cached per process; M <= 10^6.
std::vector<Int128> ramanujan_tau(std::size_t M);

/// Delta as a q-expansion of weight 12, period 1, C = 1, exact coefficients.
QExpansion delta_q_expansion(std::size_t M);

/// sigma_t(n) = sum_{d | n} d^t, exact.
Int128 divisor_sigma(int t, std::uint64_t n);

/// G_k = 2 zeta(k) + (2 (2 pi i)^k / (k-1)!) sum sigma_{k-1}(n) q^n for even k >= 4.
/// The multiplier is i^k so that G_k(-1/tau) = C (tau/i)^k G_k(tau).
QExpansion eisenstein_gk_q_expansion(int k, std::size_t M);

/// theta(tau) = 1/2 + sum_{m>=1} exp(pi i m^2 tau): weight 1/2, period 2, C = 1.
QExpansion theta_q_expansion(std::size_t M);

struct QEvaluation {
  ComplexPoint value;
  double tail_bound = 0.0;
};

/// Truncated sum at tau plus a certified bound on the omitted tail. Throws
/// BudgetExceeded when the bound exceeds abs_tol (Im tau too small for M).
QEvaluation evaluate(const QExpansion& f, ComplexPoint tau, double abs_tol = 1e-12);

/// Bound on sum_{n>M} |a_n| |q|^n from the growth cap.
double tail_bound(const QExpansion& f, double im_tau);

/// Prefactor convention of the Hecke operator: 1/n for holomorphic forms,
/// 1/sqrt(n) for Maass forms.
enum class HeckeNormalization { holomorphic, maass };

/// Coefficient action (T_n f)_m = sum_{d | gcd(n, m)} d^{k-1} a_{nm/d^2} for
/// m <= M / n. Exact when f carries exact coefficients and the holomorphic
/// normalization is used. Integer weight only.
QExpansion hecke_tn(const QExpansion& f, std::uint64_t n,
                    HeckeNormalization norm = HeckeNormalization::holomorphic);

/// T_n f at z from the defining average
///   (1/n) sum_{ad = n} a^k sum_{0 <= b < d} f((a z + b) / d).
ComplexPoint hecke_tn_pointwise(const QExpansion& f, std::uint64_t n, ComplexPoint z,
                                HeckeNormalization norm = HeckeNormalization::holomorphic);

/// |f(gamma tau) - j(gamma, tau) f(tau)|, where j = (c tau + d)^k for integer
/// weight and C (tau/i)^k for gamma = S (the only non-translation supported
/// in half-integral weight). The power uses the principal branch. Failures
/// show up as a large residual, not as an exception.
double modularity_check(const QExpansion& f, const UnimodularMatrix& gamma, ComplexPoint tau);

/// Lattice sum sum'_{|m|,|n| <= R} (m tau + n)^{-k} plus the continuum
/// estimate of the part outside the box.
struct LatticeSum {
  ComplexPoint value;
  ComplexPoint tail_correction;
};
LatticeSum eisenstein_gk_lattice(int k, ComplexPoint tau, int R);

/// CSV rows `n,a_n,a_n/n^{(k-1)/2}` for n = 1..rows, preceded by a comment
/// line and a header. Requires exact coefficients.
void write_coefficients_csv(std::ostream& out, const QExpansion& f, std::size_t rows);

}  // namespace lfl
