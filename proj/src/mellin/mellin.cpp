#include "lfl/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "lfl/parallel.hpp"
#include "lfl/quadrature.hpp"

namespace lfl {
namespace {

// Panel count for int_{-T}^{T} x^{-c-it} Phi(c+it) dt: the phase turns at
// rate |log x| + log|s| (Stirling phase of Gamma), 8 nodes per turn on
// 20-node panels, and panels no wider than 1.
int auto_panels(double x, double c, double T) {
  const double rate = std::abs(std::log(x)) + std::log(std::hypot(c, T) + 1.0);
  const double turns = 2.0 * T * rate / kTwoPi;
  const double by_oscillation = std::ceil(turns * 8.0 / 20.0);
  return static_cast<int>(std::max({by_oscillation, std::ceil(2.0 * T), 4.0}));
}

// (1/2 pi) int_{-T}^{T} x^{-(c+it)} Phi(c+it) dt and the fitted tail bound.
Reconstruction line_integral(const PhiEvaluator& phi, double x, double c, const ContourSpec& spec) {
  const int panels = spec.panels > 0 ? spec.panels : auto_panels(x, c, spec.T);
  const double log_x = std::log(x);
  const auto integrand = [&](double t) {
    const ComplexPoint s{c, t};
    return std::exp(-s * log_x) * phi(s);
  };
  // Panels are independent; sum them in index order afterwards.
  const double width = 2.0 * spec.T / panels;
  std::vector<ComplexPoint> parts(static_cast<std::size_t>(panels));
  parallel_for(parts.size(), [&](std::size_t j) {
    const double a = -spec.T + width * static_cast<double>(j);
    parts[j] = quad::composite_gauss_legendre(integrand, a, a + width, 1);
  });
  ComplexPoint total{0.0, 0.0};
  for (const auto& p : parts) total += p;

  // Fit A = max |Phi(c+it)| e^{pi t/4} over [T/2, T] (both signs of t), then
  // 2 * (1/2 pi) x^{-c} int_T^inf A e^{-pi t/4} dt.
  double A = 0.0;
  constexpr int kSamples = 16;
  for (int j = 0; j <= kSamples; ++j) {
    const double t = spec.T * (0.5 + 0.5 * j / kSamples);
    const double m = std::max(std::abs(phi({c, t})), std::abs(phi({c, -t})));
    A = std::max(A, m * std::exp(kPi * t / 4.0));
  }
  const double tail = std::exp(-c * log_x) * A * (4.0 / kPi) * std::exp(-kPi * spec.T / 4.0) / kPi;
  return {total / kTwoPi, tail, panels};
}

}  // namespace

void ContourSpec::validate() const {
  if (!std::isfinite(c) || !(T > 0.0) || panels < 0 || !(abs_tol > 0.0)) {
    throw DomainError("ContourSpec: need finite c, T > 0, panels >= 0, abs_tol > 0");
  }
}

PhiEvaluator phi_evaluator(const LSeriesDescriptor& f) {
  f.validate();
  return [f](ComplexPoint s) { return phi_completed(s, f); };
}

Reconstruction reconstruct(const LSeriesDescriptor& f, const PhiEvaluator& phi, double x,
                           const ContourSpec& spec) {
  spec.validate();
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("reconstruct: x must be positive");
  // Absolute convergence of sum a_n n^{-s} needs c > d + 1.
  if (!(spec.c > f.growth.d + 1.0)) throw DomainError("reconstruct: c below the abscissa of convergence");
  Reconstruction r = line_integral(phi, x, spec.c, spec);
  if (r.tail_bound > spec.abs_tol) throw BudgetExceeded("reconstruct: T too small for tolerance", r.tail_bound);
  r.value += f.coeffs[0];
  return r;
}

Reconstruction reconstruct_shifted(const LSeriesDescriptor& f, const PhiEvaluator& phi, double x,
                                   const ContourSpec& spec) {
  spec.validate();
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("reconstruct_shifted: x must be positive");
  const double k = f.weight;
  const double c_shift = k - spec.c;
  if (c_shift == 0.0 || c_shift == k) throw DomainError("reconstruct_shifted: shifted line passes a pole");
  Reconstruction r = line_integral(phi, x, c_shift, spec);
  if (r.tail_bound > spec.abs_tol) {
    throw BudgetExceeded("reconstruct_shifted: T too small for tolerance", r.tail_bound);
  }
  // Moving the line from c to c' < c picks up the residues in between.
  const double lo = std::min(spec.c, c_shift);
  const double hi = std::max(spec.c, c_shift);
  const double orientation = c_shift < spec.c ? 1.0 : -1.0;
  const ComplexPoint a0 = f.coeffs[0];
  ComplexPoint residues{0.0, 0.0};
  if (lo < 0.0 && 0.0 < hi) residues -= a0;
  if (lo < k && k < hi) residues += static_cast<double>(f.multiplier) * a0 * std::pow(x, -k);
  r.value += a0 + orientation * residues;
  return r;
}

double modularity_from_fe(const LSeriesDescriptor& f, const PhiEvaluator& phi, double x,
                          const ContourSpec& spec) {
  const ComplexPoint direct = reconstruct(f, phi, x, spec).value;
  const ComplexPoint mirror = reconstruct(f, phi, 1.0 / x, spec).value;
  return std::abs(direct - static_cast<double>(f.multiplier) * std::pow(x, -f.weight) * mirror);
}

}  // namespace lfl
