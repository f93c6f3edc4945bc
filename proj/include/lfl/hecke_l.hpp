#pragma once

// Completed Hecke L-functions Phi(s) = (2 pi / lambda)^{-s} Gamma(s) sum a_n n^{-s}
// of q-expansions, the Euler product of eigenforms, and Weil's twisted
// functional equation.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "lfl/dirichlet.hpp"
#include "lfl/modular_forms.hpp"
#include "lfl/report.hpp"

namespace lfl {

/// Analytic data of the L-series attached to a q-expansion. `coeffs` holds
/// a_0..a_M exactly as in the q-expansion; normalized(n) rescales to the
/// analytic normalization a_n / n^{(k-1)/2} (centre 1/2).
struct LSeriesDescriptor {
  std::vector<ComplexPoint> coeffs;
  double weight = 0.0;
  double period = 1.0;
  int multiplier = 1;
  std::vector<double> gamma_shifts;  ///< mu_j in prod Gamma_R(s + mu_j)
  std::uint32_t conductor = 1;
  std::optional<ComplexPoint> sign;  ///< root number, unit modulus when set
  GrowthBound growth;

  ComplexPoint normalized(std::size_t n) const;
  void validate() const;
};

/// Descriptor of a level-one form: conductor 1, sign C, and for integer
/// weight the shifts {(k-1)/2, (k+1)/2} of Gamma_C(s + (k-1)/2).
LSeriesDescriptor describe(const QExpansion& f);

/// Phi(s) for all s off {0, k} (or all s when a_0 = 0), via
///   Phi(s) = sum_n a_n [x_n^{-s} Gamma(s, x_n) + C x_n^{s-k} Gamma(k-s, x_n)]
///            - a_0/s - C a_0/(k-s),   x_n = 2 pi n / lambda,
/// the term-wise integral over [1, inf) of the symmetrized Mellin transform.
/// Terms are summed until the certified remainder is below abs_tol; throws
/// BudgetExceeded if the stored coefficients run out first.
ComplexPoint phi_completed(ComplexPoint s, const LSeriesDescriptor& f, double abs_tol = 1e-16);
ComplexPoint phi_completed(ComplexPoint s, const QExpansion& f, double abs_tol = 1e-16);

/// (2 pi / lambda)^{-s} Gamma(s) sum_{n <= N} a_n n^{-s}: the Dirichlet side,
/// meaningful where the series converges absolutely.
ComplexPoint phi_dirichlet(ComplexPoint s, const QExpansion& f, std::size_t N);

/// sum_{n <= X} a_n n^{-s} with a_n normalized by a_1 and n^{(k-1)/2}.
ComplexPoint normalized_dirichlet_partial(const QExpansion& f, ComplexPoint s, std::size_t X);

/// prod_{p <= X} (1 - a_p p^{-s} + p^{-2s})^{-1} with the same normalization.
ComplexPoint normalized_euler_partial(const QExpansion& f, ComplexPoint s, std::size_t X);

/// Gap between the two partial evaluations at cutoff X (needs X <= M and
/// Re s > 3/2). The report passes when the gap is below `tolerance`.
VerificationReport euler_product_check(const QExpansion& f, ComplexPoint s, std::size_t X,
                                       double tolerance = 1e-6);

/// Weil's twisted functional equation for a level-one form and a primitive
/// character chi mod r. Left side: Lambda(s, chi) = (2 pi)^{-s} Gamma(s)
/// sum_{n <= M} a_n chi(n) n^{-s} by direct summation (Re s large). Right
/// side: I_chi(s) + w_chi r^{k-2s-1} I_{chi-bar}(k - s) with
///   I_chi(s) = sum a_n chi(n) (2 pi n)^{-s} Gamma(s, 2 pi n / r),
///   w_chi = i^k g(chi)^2,
/// i.e. the integral of f_chi(iy) y^{s-1} over [1/r, inf) and its image
/// under the twisted transformation. Residual is the absolute difference.
VerificationReport weil_twist_check(const QExpansion& f, const DirichletCharacter& chi,
                                    ComplexPoint s, double tolerance = 1e-6);

}  // namespace lfl
