#pragma once

// The real-analytic Eisenstein series E(z, s) for SL(2, Z): lattice sum,
// Fourier expansion (the continuation to all s), scattering function and
// the checks built on them.

#include <functional>

#include "lfl/core.hpp"

namespace lfl {

/// z = x + iy with y > 0.
struct UpperHalfPoint {
  double x = 0.0;
  double y = 1.0;

  UpperHalfPoint() = default;
  UpperHalfPoint(double x_, double y_);
  ComplexPoint z() const { return {x, y}; }
};

struct EisensteinValue {
  ComplexPoint value;
  double tail_estimate = 0.0;  ///< size of the continuum correction added for |m|,|n| > R
};

/// E(z, s) = (1/2) zeta(2s)^{-1} sum'_{|m|,|n| <= R} y^s / |mz + n|^{2s} plus the
/// continuum estimate of the terms outside the box. Re s > 1 + 1e-3.
EisensteinValue eisenstein_lattice(UpperHalfPoint z, ComplexPoint s, int R);

/// (1/2) sum over coprime (c, d), |c|,|d| <= R, of y^s / |cz + d|^{2s}, with the
/// outside-box continuum scaled by the coprime density 6/pi^2.
EisensteinValue eisenstein_coprime(UpperHalfPoint z, ComplexPoint s, int R);

/// sum_{d | n} d^{-w}.
ComplexPoint divisor_sigma_complex(ComplexPoint w, std::uint64_t n);

/// Fourier coefficient a_n(y, s), n != 0:
///   2 sqrt(y) K_{s-1/2}(2 pi |n| y) |n|^{s-1/2} sigma_{1-2s}(|n|) / xi(2s),
/// with xi(2s) = pi^{-s} Gamma(s) zeta(2s).
ComplexPoint eisenstein_fourier_coefficient(std::int64_t n, double y, ComplexPoint s);

/// Constant term y^s + phi(s) y^{1-s}.
ComplexPoint eisenstein_constant_term(double y, ComplexPoint s);

/// a_0 + sum_{0 < |n| <= M} a_n(y, s) e^{2 pi i n x}. M = 0 chooses M from the
/// decay e^{-2 pi |n| y}. Valid for every s outside the exclusion discs of
/// radius 1e-3 around 0, 1/2 and 1; needs y >= 0.3.
ComplexPoint eisenstein_fourier(UpperHalfPoint z, ComplexPoint s, int M = 0);

/// phi(s) = xi(2s - 1) / xi(2s).
ComplexPoint scattering_phi(ComplexPoint s);

/// |E(z, s) - phi(s) E(z, 1 - s)|, both sides from the Fourier expansion.
double verify_eis_fe(UpperHalfPoint z, ComplexPoint s);

/// The functional equation of xi re-derived from a_1(y, s) = phi(s) a_1(y, 1-s)
/// at y = 1 with s = (1 + s')/2: with B(s) = 2 sqrt(y) K_{s-1/2}(2 pi y), the
/// identity is xi(s') B(1-s) = xi(1-s') B(s). Returns
/// |xi(s') B(1-s) / B(s) - xi(1-s')|, the Bessel factors evaluated at the two
/// orders independently.
double zeta_fe_from_a1(ComplexPoint s_prime);

/// -y^2 (F_xx + F_yy) at z by second-order central differences with step h.
ComplexPoint hyperbolic_laplacian(const std::function<ComplexPoint(UpperHalfPoint)>& F,
                                  UpperHalfPoint z, double h);

/// |Delta E(z, s) - s(1-s) E(z, s)| with the stencil above, h in [1e-4, 1e-2].
double laplacian_check(UpperHalfPoint z, ComplexPoint s, double h);

}  // namespace lfl
