#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "lfl/langlands.hpp"
#include "lfl/modular_forms.hpp"
#include "lfl/primes.hpp"
#include "oracles.hpp"

using namespace lfl;

TEST_CASE("Satake parameters") {
  const auto d = satake_from_ap(1.0, 5);
  REQUIRE(d.degree() == 2);
  CHECK(std::abs(d.alphas[0] + d.alphas[1] - 1.0) < 1e-15);
  CHECK(std::abs(d.alphas[0] * d.alphas[1] - 1.0) < 1e-15);
  CHECK(std::abs(std::abs(d.alphas[0]) - 1.0) < 1e-15);
  const auto big = satake_from_ap(2.5, 7);
  CHECK(std::abs(big.alphas[0] * big.alphas[1] - 1.0) < 1e-15);
  CHECK(std::abs(big.alphas[0]) > 1.0);
  CHECK_THROWS_AS(satake_from_ap(1.0, 4), DomainError);
  CHECK_THROWS_AS(satake_from_ap(NAN, 5), DomainError);
}

TEST_CASE("local factors") {
  const ComplexPoint s{1.5, 0.5};
  const auto d = satake_from_ap(0.7, 3);
  const ComplexPoint x = std::exp(-s * std::log(3.0));
  CHECK(std::abs(standard_local(d, s) - 1.0 / (1.0 - 0.7 * x + x * x)) < 1e-15);
  CHECK(std::abs(standard_local(trivial_satake(3), s) - 1.0 / (1.0 - x)) < 1e-15);
  CHECK(sym_power_monomials(d, 3).size() == 4);
  CHECK(sym_power_monomials_gln(d, 3).size() == 4);
  CHECK(ext_power_monomials(d, 2).size() == 1);
  CHECK(rankin_selberg_monomials(d, d).size() == 4);
  CHECK(std::abs(sym_power_local(d, 3, s) - sym_power_local_gln(d, 3, s)) < 1e-14);
  CHECK_THROWS_AS(ext_power_monomials(d, 3), DomainError);
  CHECK_THROWS_AS(rankin_selberg_local(d, satake_from_ap(0.7, 5), s), DomainError);
}

TEST_CASE("L(f x f) = L(Sym^2 f) zeta and L(Ext^2 f) = zeta, prime by prime") {
  const auto coeffs = delta_prime_coefficients(100);
  for (const auto& c : coeffs) {
    const auto d = satake_from_ap(c.normalized, c.p);
    for (const ComplexPoint s : {ComplexPoint(2.0, 0.0), ComplexPoint(1.2, 7.0)}) {
      const ComplexPoint lhs = rankin_selberg_local(d, d, s);
      const ComplexPoint rhs = sym_power_local(d, 2, s) * standard_local(trivial_satake(c.p), s);
      CHECK(std::abs(lhs - rhs) < 1e-13 * std::abs(lhs));
      CHECK(std::abs(ext_power_local(d, 2, s) - standard_local(trivial_satake(c.p), s)) < 1e-13);
    }
  }
}

TEST_CASE("prime coefficients of Delta") {
  const auto coeffs = delta_prime_coefficients(1000);
  CHECK(coeffs.size() == prime_count(1000));
  CHECK(coeffs[0].p == 2);
  REQUIRE(coeffs[0].exact.has_value());
  CHECK(*coeffs[0].exact == -24);
  CHECK(coeffs[0].normalized == doctest::Approx(-24.0 / std::pow(2.0, 5.5)));
  CHECK_THROWS_AS(delta_prime_coefficients(1), DomainError);
}

TEST_CASE("semicircle moments are Catalan numbers") {
  const double catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int j = 0; j < 8; ++j) {
    CHECK(semicircle_moment(2 * j) == doctest::Approx(catalan[j]).epsilon(1e-12));
    CHECK(std::abs(semicircle_moment(2 * j + 1)) < 1e-12);
  }
  CHECK_THROWS_AS(semicircle_moment(21), DomainError);
}

TEST_CASE("Sato-Tate statistics for Delta") {
  const auto coeffs = delta_prime_coefficients(20000);
  const auto r = sato_tate_report(coeffs, 20000, 4, 20);
  CHECK(r.report.pass());
  CHECK(r.primes == prime_count(20000));
  CHECK(r.out_of_range == 0);
  REQUIRE(r.moments.size() == 5);
  CHECK(r.moments[0].empirical == doctest::Approx(1.0));
  CHECK(std::abs(r.moments[2].empirical - 1.0) < 0.05);
  CHECK(r.histogram.size() == 20);
  double mass = 0.0;
  for (const auto& b : r.histogram) mass += b.empirical_density * (oracle::pi / 20.0);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.discrepancy < 0.1);
  std::ostringstream m, h;
  write_moments_csv(m, r);
  write_histogram_csv(h, r);
  const std::string ms = m.str(), hs = h.str();
  CHECK(std::count(ms.begin(), ms.end(), '\n') == 7);
  CHECK(std::count(hs.begin(), hs.end(), '\n') == 22);
}

TEST_CASE("discrepancy shrinks with X") {
  const auto coeffs = delta_prime_coefficients(100000);
  const double d1 = sato_tate_report(coeffs, 5000, 4, 20).discrepancy;
  const double d2 = sato_tate_report(coeffs, 100000, 4, 20).discrepancy;
  CHECK(d2 < d1);
}

TEST_CASE("Ramanujan bound holds for Delta and catches a planted violation") {
  auto coeffs = delta_prime_coefficients(10000);
  const auto ok = ramanujan_kim_sarnak_check(coeffs, 10000);
  CHECK(ok.report.pass());
  CHECK(ok.violations == 0);
  CHECK(ok.max_abs_ap <= 2.0);
  CHECK(ok.min_log_margin > 0.0);
  coeffs[10].normalized = 2.5;
  coeffs[10].exact.reset();
  const auto bad = ramanujan_kim_sarnak_check(coeffs, 10000);
  CHECK_FALSE(bad.report.pass());
  CHECK(bad.violations == 1);
}

TEST_CASE("Sarnak's polynomial") {
  CHECK(sarnak_polynomial(0.0) == 0.0);
  CHECK(sarnak_polynomial(1.0) == 0.0);
  CHECK(sarnak_polynomial(-2.0) == 0.0);
  CHECK(sarnak_polynomial(1.5) == doctest::Approx(2.25 * 1.75 * 1.25));
  for (int n = 3; n < 50; ++n) CHECK(sarnak_polynomial(n) < 0.0);
  const auto coeffs = delta_prime_coefficients(20000);
  const auto r = sarnak_integrality_test(coeffs, 20000);
  CHECK(r.report.pass());
  CHECK(r.semicircle_integral == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.positive_integer_values == 0);
  CHECK(std::abs(r.normalized_average - 1.0) < 0.1);
  CHECK(r.integer_average < 0.0);
}
