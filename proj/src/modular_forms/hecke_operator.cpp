#include <cmath>
#include <limits>
#include <numeric>

#include "lfl/modular_forms.hpp"

namespace lfl {

QExpansion hecke_tn(const QExpansion& f, std::uint64_t n, HeckeNormalization norm) {
  if (n == 0) throw DomainError("hecke_tn: n must be positive");
  if (!f.has_integer_weight()) throw DomainError("hecke_tn: integer weight only");
  const std::size_t M_out = f.truncation() / n;
  if (M_out < 1) throw DomainError("hecke_tn: input truncation shorter than n");
  const int k = static_cast<int>(f.weight());
  // The Maass convention differs by the factor sqrt(n) in the prefactor.
  const double rescale = norm == HeckeNormalization::maass ? std::sqrt(static_cast<double>(n)) : 1.0;
  const bool exact = f.has_exact() && norm == HeckeNormalization::holomorphic;

  std::vector<ComplexPoint> coeffs(M_out + 1, 0.0);
  std::vector<Int128> exact_coeffs(exact ? M_out + 1 : 0, 0);
  for (std::size_t m = 0; m <= M_out; ++m) {
    // d | gcd(n, m); gcd(n, 0) = n, which gives sigma_{k-1}(n) a_0 for m = 0.
    const std::uint64_t g = std::gcd(n, static_cast<std::uint64_t>(m));
    ComplexPoint acc{0.0, 0.0};
    Int128 acc_exact = 0;
    for (std::uint64_t d = 1; d <= g; ++d) {
      if (g % d != 0) continue;
      const std::size_t idx = n * m / (d * d);
      const double dk = std::pow(static_cast<double>(d), k - 1);
      acc += dk * f.a(idx);
      if (exact) {
        Int128 dpow = 1;
        for (int i = 0; i < k - 1; ++i) dpow = checked_mul_add(dpow, static_cast<Int128>(d), 0);
        acc_exact = checked_mul_add(dpow, f.exact()[idx], acc_exact);
      }
    }
    coeffs[m] = acc * rescale;
    if (exact) {
      exact_coeffs[m] = acc_exact;
      coeffs[m] = static_cast<double>(acc_exact);
    }
  }
  // |(T_n f)_m| <= sigma_{k-1}(n) max_{j <= nm} |a_j| <= n^k K (nm)^d.
  const auto [K, d] = f.growth();
  const double nn = static_cast<double>(n);
  const GrowthBound growth{K * std::pow(nn, k + d) * rescale, d};
  return QExpansion(f.weight(), f.period(), f.multiplier(), std::move(coeffs), growth,
                    std::move(exact_coeffs));
}

ComplexPoint hecke_tn_pointwise(const QExpansion& f, std::uint64_t n, ComplexPoint z,
                                HeckeNormalization norm) {
  if (n == 0) throw DomainError("hecke_tn_pointwise: n must be positive");
  if (!f.has_integer_weight()) throw DomainError("hecke_tn_pointwise: integer weight only");
  if (!(z.imag() > 0.0)) throw DomainError("hecke_tn_pointwise: requires Im z > 0");
  const int k = static_cast<int>(f.weight());
  ComplexPoint sum{0.0, 0.0};
  for (std::uint64_t a = 1; a <= n; ++a) {
    if (n % a != 0) continue;
    const std::uint64_t d = n / a;
    const double ak = std::pow(static_cast<double>(a), k);
    for (std::uint64_t b = 0; b < d; ++b) {
      const ComplexPoint w = (static_cast<double>(a) * z + static_cast<double>(b)) / static_cast<double>(d);
      sum += ak * evaluate(f, w, std::numeric_limits<double>::infinity()).value;
    }
  }
  const double nn = static_cast<double>(n);
  return sum / (norm == HeckeNormalization::maass ? std::sqrt(nn) : nn);
}

}  // namespace lfl
