#pragma once

// Numerical Mellin inversion: recover f(ix) from its completed L-function
// along a vertical contour, the converse direction of Hecke's theorem.

#include <functional>

#include "lfl/hecke_l.hpp"

namespace lfl {

/// Vertical segment Re s = c, |Im s| <= T. panels = 0 picks the panel count
/// from the oscillation rate of the integrand. The tail beyond T must be
/// below abs_tol.
struct ContourSpec {
  double c = 2.0;
  double T = 40.0;
  int panels = 0;
  double abs_tol = 1e-8;

  void validate() const;
};

using PhiEvaluator = std::function<ComplexPoint(ComplexPoint)>;

/// Phi of the descriptor via phi_completed.
PhiEvaluator phi_evaluator(const LSeriesDescriptor& f);

struct Reconstruction {
  ComplexPoint value;
  double tail_bound = 0.0;  ///< estimate of the truncated part |Im s| > T
  int panels = 0;
};

/// f(ix) = a_0 + (1/2 pi i) int_{c-iT}^{c+iT} x^{-s} Phi(s) ds by composite
/// Gauss-Legendre. The tail bound fits |Phi(c+it)| <= A e^{-pi t/4} on
/// [T/2, T] and integrates the model beyond T; throws BudgetExceeded if it
/// exceeds spec.abs_tol. Requires c above the abscissa of convergence.
Reconstruction reconstruct(const LSeriesDescriptor& f, const PhiEvaluator& phi, double x,
                           const ContourSpec& spec);

/// The same value from the contour Re s = k - c plus the residues of
/// x^{-s} Phi(s) at the poles s = 0 (-a_0) and s = k (C a_0 x^{-k}) lying
/// between the two lines.
Reconstruction reconstruct_shifted(const LSeriesDescriptor& f, const PhiEvaluator& phi, double x,
                                   const ContourSpec& spec);

/// |f(ix) - C x^{-k} f(i/x)| with both values reconstructed from Phi.
double modularity_from_fe(const LSeriesDescriptor& f, const PhiEvaluator& phi, double x,
                          const ContourSpec& spec);

}  // namespace lfl
