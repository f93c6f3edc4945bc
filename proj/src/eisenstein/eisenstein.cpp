#include "lfl/eisenstein.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "lfl/lattice.hpp"
#include "lfl/parallel.hpp"
#include "lfl/special_fn.hpp"
#include "lfl/zeta.hpp"

namespace lfl {
namespace {

constexpr double kExclusion = 1e-3;

void require_regular(ComplexPoint s, const char* where) {
  require_finite(s, where);
  for (const double p : {0.0, 0.5, 1.0}) {
    if (near_integer(s, p, kExclusion)) {
      throw PoleError(std::string(where) + ": s lies in an exclusion disc around 0, 1/2 or 1");
    }
  }
}

// Half-lattice sum over (m, n) with m > 0, or m = 0 and n > 0, inside the box;
// only pairs accepted by `keep` contribute. Rows are summed per index and
// reduced in order for bit-stable output.
template <typename Keep>
ComplexPoint half_lattice(UpperHalfPoint z, ComplexPoint s, int R, Keep keep) {
  std::vector<ComplexPoint> rows(static_cast<std::size_t>(R) + 1);
  parallel_for(rows.size(), [&](std::size_t mi) {
    const int m = static_cast<int>(mi);
    ComplexPoint row{0.0, 0.0};
    for (int n = R; n >= -R; --n) {
      if (m == 0 && n <= 0) continue;
      if (!keep(m, n)) continue;
      const double re = m * z.x + n;
      const double im = m * z.y;
      row += std::exp(-s * std::log(re * re + im * im));
    }
    rows[mi] = row;
  });
  ComplexPoint total{0.0, 0.0};
  for (std::size_t i = rows.size(); i-- > 0;) total += rows[i];
  return total;
}

ComplexPoint continuum(UpperHalfPoint z, ComplexPoint s, int R) {
  // |mz + n|^{-2s} is homogeneous of degree -2s in (m, n).
  const auto angular = [&](double c, double d) {
    const double re = c * z.x + d;
    const double im = c * z.y;
    return std::exp(-s * std::log(re * re + im * im));
  };
  // The full-plane integral counts each +-(m, n) pair twice.
  return 0.5 * homogeneous_tail(angular, 2.0 * s, R + 0.5);
}

void require_lattice_domain(UpperHalfPoint z, ComplexPoint s, int R, const char* where) {
  require_finite(s, where);
  (void)z;
  if (!(s.real() > 1.0 + kExclusion)) throw DomainError(std::string(where) + ": requires Re s > 1");
  if (R < 1) throw DomainError(std::string(where) + ": R must be positive");
}

}  // namespace

UpperHalfPoint::UpperHalfPoint(double x_, double y_) : x(x_), y(y_) {
  if (!std::isfinite(x) || !std::isfinite(y) || !(y > 0.0)) {
    throw DomainError("UpperHalfPoint: requires finite x and y > 0");
  }
}

EisensteinValue eisenstein_lattice(UpperHalfPoint z, ComplexPoint s, int R) {
  require_lattice_domain(z, s, R, "eisenstein_lattice");
  const ComplexPoint ys = std::exp(s * std::log(z.y));
  const ComplexPoint zeta2s = zeta(2.0 * s);
  const ComplexPoint box = half_lattice(z, s, R, [](int, int) { return true; });
  const ComplexPoint tail = continuum(z, s, R);
  // (1/2) sum over the full lattice = sum over the half lattice.
  return {ys * (box + tail) / zeta2s, std::abs(ys * tail / zeta2s)};
}

EisensteinValue eisenstein_coprime(UpperHalfPoint z, ComplexPoint s, int R) {
  require_lattice_domain(z, s, R, "eisenstein_coprime");
  const ComplexPoint ys = std::exp(s * std::log(z.y));
  const ComplexPoint box =
      half_lattice(z, s, R, [](int m, int n) { return std::gcd(m, n) == 1; });
  const ComplexPoint tail = continuum(z, s, R) * (6.0 / (kPi * kPi));
  return {ys * (box + tail), std::abs(ys * tail)};
}

ComplexPoint divisor_sigma_complex(ComplexPoint w, std::uint64_t n) {
  if (n == 0) throw DomainError("divisor_sigma_complex: n must be positive");
  ComplexPoint sum{0.0, 0.0};
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    sum += std::exp(-w * std::log(static_cast<double>(d)));
    const std::uint64_t e = n / d;
    if (e != d) sum += std::exp(-w * std::log(static_cast<double>(e)));
  }
  return sum;
}

ComplexPoint eisenstein_fourier_coefficient(std::int64_t n, double y, ComplexPoint s) {
  if (n == 0) throw DomainError("eisenstein_fourier_coefficient: use the constant term for n = 0");
  if (!(y > 0.0)) throw DomainError("eisenstein_fourier_coefficient: requires y > 0");
  const auto an = static_cast<std::uint64_t>(n < 0 ? -n : n);
  const double dn = static_cast<double>(an);
  const ComplexPoint k = bessel_k(s - 0.5, kTwoPi * dn * y);
  const ComplexPoint npow = std::exp((s - 0.5) * std::log(dn));
  const ComplexPoint sigma = divisor_sigma_complex(2.0 * s - 1.0, an);
  return 2.0 * std::sqrt(y) * k * npow * sigma / xi(2.0 * s).value;
}

ComplexPoint eisenstein_constant_term(double y, ComplexPoint s) {
  const double log_y = std::log(y);
  return std::exp(s * log_y) + scattering_phi(s) * std::exp((1.0 - s) * log_y);
}

ComplexPoint eisenstein_fourier(UpperHalfPoint z, ComplexPoint s, int M) {
  require_regular(s, "eisenstein_fourier");
  if (z.y < 0.3) throw DomainError("eisenstein_fourier: requires y >= 0.3");
  if (M < 0) throw DomainError("eisenstein_fourier: M must be non-negative");
  if (M == 0) {
    // K_v(u) ~ sqrt(pi/2u) e^{-u}; stop once e^{-2 pi n y} n^{|Re s|} is negligible.
    const double growth = std::abs(s.real() - 0.5) + 1.0;
    M = 1;
    while (kTwoPi * M * z.y - growth * std::log(M + 1.0) < 45.0) ++M;
  }
  ComplexPoint sum{0.0, 0.0};
  for (int n = M; n >= 1; --n) {
    // a_{-n} = a_n, so the pair contributes 2 a_n cos(2 pi n x).
    sum += eisenstein_fourier_coefficient(n, z.y, s) * (2.0 * std::cos(kTwoPi * n * z.x));
  }
  return eisenstein_constant_term(z.y, s) + sum;
}

ComplexPoint scattering_phi(ComplexPoint s) {
  require_finite(s, "scattering_phi");
  const ComplexPoint a = 2.0 * s - 1.0;
  const ComplexPoint b = 2.0 * s;
  for (const ComplexPoint w : {a, b}) {
    if (std::abs(w) == 0.0 || w == ComplexPoint(1.0, 0.0)) throw PoleError("scattering_phi: xi pole");
  }
  return xi(a).value / xi(b).value;
}

double verify_eis_fe(UpperHalfPoint z, ComplexPoint s) {
  return std::abs(eisenstein_fourier(z, s) - scattering_phi(s) * eisenstein_fourier(z, 1.0 - s));
}

double zeta_fe_from_a1(ComplexPoint s_prime) {
  require_finite(s_prime, "zeta_fe_from_a1");
  if (std::abs(s_prime) == 0.0 || s_prime == ComplexPoint(1.0, 0.0)) {
    throw PoleError("zeta_fe_from_a1: xi pole");
  }
  constexpr double y = 1.0;
  const ComplexPoint s = (1.0 + s_prime) / 2.0;
  const auto B = [&](ComplexPoint w) { return 2.0 * std::sqrt(y) * bessel_k(w - 0.5, kTwoPi * y); };
  const ComplexPoint b_s = B(s);
  const ComplexPoint b_dual = B(1.0 - s);
  return std::abs(xi(s_prime).value * b_dual / b_s - xi(1.0 - s_prime).value);
}

ComplexPoint hyperbolic_laplacian(const std::function<ComplexPoint(UpperHalfPoint)>& F,
                                  UpperHalfPoint z, double h) {
  if (!(h > 0.0) || !(z.y - h > 0.0)) throw DomainError("hyperbolic_laplacian: stencil leaves H");
  const ComplexPoint centre = F(z);
  const ComplexPoint fxx = F({z.x + h, z.y}) - 2.0 * centre + F({z.x - h, z.y});
  const ComplexPoint fyy = F({z.x, z.y + h}) - 2.0 * centre + F({z.x, z.y - h});
  return -z.y * z.y * (fxx + fyy) / (h * h);
}

double laplacian_check(UpperHalfPoint z, ComplexPoint s, double h) {
  if (!(h >= 1e-4 && h <= 1e-2)) throw DomainError("laplacian_check: h must lie in [1e-4, 1e-2]");
  const auto E = [&](UpperHalfPoint w) { return eisenstein_fourier(w, s); };
  return std::abs(hyperbolic_laplacian(E, z, h) - s * (1.0 - s) * E(z));
}

}  // namespace lfl
