#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lfl/eisenstein.hpp"
#include "lfl/special_fn.hpp"
#include "lfl/zeta.hpp"
#include "oracles.hpp"

using namespace lfl;

TEST_CASE("lattice, coprime and Fourier forms agree") {
  for (const auto& [z, s] : {std::pair{UpperHalfPoint(0.1, 1.2), ComplexPoint(2.0, 0.0)},
                             std::pair{UpperHalfPoint(-0.3, 0.9), ComplexPoint(1.5, 2.0)},
                             std::pair{UpperHalfPoint(0.5, 2.0), ComplexPoint(3.0, -1.0)}}) {
    const ComplexPoint four = eisenstein_fourier(z, s);
    const auto lat = eisenstein_lattice(z, s, 150);
    const auto cop = eisenstein_coprime(z, s, 150);
    CHECK(std::abs(lat.value - four) < 1e-6 * std::abs(four));
    CHECK(std::abs(cop.value - four) < 1e-3 * std::abs(four));
    CHECK(lat.tail_estimate > 0.0);
  }
}

TEST_CASE("Fourier coefficients at s = 2 match the closed form") {
  // a_n(y, s) = 2 pi^s / Gamma(s) |n|^{s-1/2} sigma_{1-2s}(|n|) sqrt(y) K_{s-1/2}(2 pi |n| y) / zeta(2s)
  const ComplexPoint s{2.0, 0.0};
  const double y = 1.3;
  for (std::int64_t n : {1, 2, 6, -3}) {
    const double an = std::abs(double(n));
    const double sig = std::real(divisor_sigma_complex(2.0 * s - 1.0, static_cast<std::uint64_t>(an)));
    double sig_direct = 0.0;
    for (int d = 1; d <= an; ++d) {
      if (static_cast<int>(an) % d == 0) sig_direct += std::pow(d, -3.0);
    }
    CHECK(std::abs(sig - sig_direct) < 1e-15);
    const ComplexPoint expect = 2.0 * std::pow(oracle::pi, 2.0) * std::pow(an, 1.5) * sig_direct * std::sqrt(y) *
                                oracle::bessel_k(1.5, 2.0 * oracle::pi * an * y) / (std::pow(oracle::pi, 4) / 90.0);
    CHECK(std::abs(eisenstein_fourier_coefficient(n, y, s) - expect) < 1e-12 * std::abs(expect));
  }
  CHECK_THROWS_AS(eisenstein_fourier_coefficient(0, y, s), DomainError);
}

TEST_CASE("x-average recovers the constant term") {
  const double y = 1.5;
  const ComplexPoint s{2.0, 1.0};
  ComplexPoint avg{};
  const int N = 64;
  for (int j = 0; j < N; ++j) avg += eisenstein_fourier(UpperHalfPoint(double(j) / N, y), s);
  avg /= double(N);
  CHECK(std::abs(avg - eisenstein_constant_term(y, s)) < 1e-12);
  // y^s + phi(s) y^{1-s}
  const ComplexPoint ct = std::exp(s * std::log(y)) + scattering_phi(s) * std::exp((1.0 - s) * std::log(y));
  CHECK(std::abs(eisenstein_constant_term(y, s) - ct) < 1e-13);
}

TEST_CASE("scattering matrix") {
  for (double t : {0.5, 3.0, 11.0}) CHECK(std::abs(std::abs(scattering_phi(ComplexPoint(0.5, t))) - 1.0) < 1e-12);
  // phi(s) phi(1-s) = 1
  const ComplexPoint s{0.8, 2.3};
  CHECK(std::abs(scattering_phi(s) * scattering_phi(1.0 - s) - 1.0) < 1e-12);
  // phi(s) = xi(2s - 1) / xi(2s)
  CHECK(std::abs(scattering_phi(2.0) - oracle::xi(3.0) / oracle::xi(4.0)) < 1e-13);
  CHECK(std::abs(scattering_phi(ComplexPoint(0.75, -4.0)) - std::conj(scattering_phi(ComplexPoint(0.75, 4.0)))) < 1e-14);
  CHECK_THROWS_AS(scattering_phi(0.5), PoleError);
}

TEST_CASE("functional equation and invariance") {
  for (const auto& [z, s] : {std::pair{UpperHalfPoint(0.2, 1.1), ComplexPoint(0.3, 4.0)},
                             std::pair{UpperHalfPoint(-0.45, 0.8), ComplexPoint(1.7, -2.0)}}) {
    CHECK(verify_eis_fe(z, s) < 1e-10);
  }
  // E(-1/z) = E(z) with both points in the Fourier range.
  const UpperHalfPoint z(0.3, 0.95);
  const ComplexPoint w = -1.0 / z.z();
  const ComplexPoint s{2.5, 1.0};
  CHECK(std::abs(eisenstein_fourier(UpperHalfPoint(w.real(), w.imag()), s) - eisenstein_fourier(z, s)) < 1e-10);
  CHECK(std::abs(eisenstein_fourier(UpperHalfPoint(1.3, 0.95), s) - eisenstein_fourier(z, s)) < 1e-12);
}

TEST_CASE("zeta functional equation from the first Fourier coefficient") {
  for (const ComplexPoint sp : {ComplexPoint(0.3, 6.0), ComplexPoint(2.5, 1.0), ComplexPoint(-0.7, -3.0)}) {
    CHECK(zeta_fe_from_a1(sp) < 1e-10);
  }
}

TEST_CASE("Laplace eigenvalue") {
  const UpperHalfPoint z(0.1, 1.3);
  CHECK(laplacian_check(z, ComplexPoint(0.5, 3.0), 5e-4) < 1e-5);
  const double e1 = laplacian_check(z, 2.0, 4e-3);
  const double e2 = laplacian_check(z, 2.0, 2e-3);
  CHECK(std::log2(e1 / e2) == doctest::Approx(2.0).epsilon(0.1));
  const auto constant = [](UpperHalfPoint) { return ComplexPoint(3.0, 0.0); };
  CHECK(std::abs(hyperbolic_laplacian(constant, z, 1e-3)) < 1e-6);
  CHECK_THROWS_AS(laplacian_check(z, 2.0, 0.1), DomainError);
}

TEST_CASE("domain checks") {
  CHECK_THROWS_AS(UpperHalfPoint(0.0, -1.0), DomainError);
  CHECK_THROWS_AS(eisenstein_fourier(UpperHalfPoint(0.0, 0.2), 2.0), DomainError);
  CHECK_THROWS_AS(eisenstein_fourier(UpperHalfPoint(0.0, 1.0), ComplexPoint(0.5, 0.0005)), PoleError);
  CHECK_THROWS_AS(eisenstein_fourier(UpperHalfPoint(0.0, 1.0), ComplexPoint(1.0005, 0.0)), PoleError);
  CHECK_THROWS_AS(eisenstein_lattice(UpperHalfPoint(0.0, 1.0), 0.9, 10), DomainError);
}
