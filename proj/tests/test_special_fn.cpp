#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lfl/special_fn.hpp"
#include "oracles.hpp"

using namespace lfl;

namespace {
double rel(ComplexPoint a, ComplexPoint b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }
}  // namespace

TEST_CASE("gamma at integers and half-integers") {
  CHECK(gamma(ComplexPoint(5.0)).real() == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(std::abs(gamma(ComplexPoint(0.5)) - std::sqrt(oracle::pi)) < 1e-14);
  CHECK(std::abs(gamma(ComplexPoint(-0.5)) + 2.0 * std::sqrt(oracle::pi)) < 1e-13);
  CHECK(gamma(ComplexPoint(3.0)).imag() == 0.0);
}

TEST_CASE("gamma against the Stirling oracle off the axis") {
  for (const ComplexPoint s : {ComplexPoint(0.3, 4.0), ComplexPoint(2.5, -7.0), ComplexPoint(-3.7, 1.2),
                               ComplexPoint(10.0, 20.0), ComplexPoint(0.01, 0.02)}) {
    CHECK(rel(gamma(s), oracle::gamma(s)) < 1e-13);
  }
}

TEST_CASE("log_gamma is the principal continuation") {
  // Large |Im s| where Gamma itself underflows.
  const ComplexPoint s{0.5, 800.0};
  CHECK(std::abs(std::exp(log_gamma(s) - oracle::log_gamma(s)) - 1.0) < 1e-11);
  CHECK_THROWS_AS(gamma(s), RangeError);
  CHECK_THROWS_AS(log_gamma(ComplexPoint(-2.0)), PoleError);
  CHECK(std::abs(rgamma(ComplexPoint(-3.0))) == 0.0);
}

TEST_CASE("incomplete gamma against the integral oracle") {
  CHECK(std::abs(upper_incomplete_gamma(2.0, 1.0) - 2.0 / std::exp(1.0)) < 1e-15);
  for (const auto& [s, x] : {std::pair{ComplexPoint(0.5, 3.0), 0.7}, std::pair{ComplexPoint(-1.5, 2.0), 2.0},
                             std::pair{ComplexPoint(8.0, -3.0), 6.3}, std::pair{ComplexPoint(0.25, 0.0), 0.05},
                             std::pair{ComplexPoint(-2.0, 0.0), 1.5}, std::pair{ComplexPoint(3.0, 15.0), 31.4}}) {
    CHECK(rel(upper_incomplete_gamma(s, x), oracle::upper_gamma(s, x)) < 1e-11);
  }
}

TEST_CASE("incomplete gamma routes agree where both apply") {
  const AccuracyBudget b;
  for (const auto& [s, x] : {std::pair{ComplexPoint(1.5, 2.0), 3.0}, std::pair{ComplexPoint(0.7, -1.0), 2.5}}) {
    CHECK(rel(detail::incomplete_gamma_cf(s, x, b), detail::incomplete_gamma_series(s, x, b)) < 1e-12);
  }
  CHECK_THROWS_AS(upper_incomplete_gamma(1.0, -1.0), DomainError);
}

TEST_CASE("K-Bessel against the integral oracle") {
  CHECK(std::abs(bessel_k(0.0, 5.0) - 0.0036910983340425934) < 1e-17);
  // K_{1/2}(y) = sqrt(pi/(2y)) e^{-y}
  CHECK(rel(bessel_k(0.5, 1.0), std::sqrt(oracle::pi / 2.0) * std::exp(-1.0)) < 1e-14);
  for (const auto& [v, y] : {std::pair{ComplexPoint(0.0, 3.0), 0.8}, std::pair{ComplexPoint(2.5, 0.0), 6.28},
                             std::pair{ComplexPoint(1.0, 0.0), 0.3}, std::pair{ComplexPoint(0.3, 7.0), 2.0},
                             std::pair{ComplexPoint(3.0, -2.0), 12.0}}) {
    CHECK(rel(bessel_k(v, y), oracle::bessel_k(v, y)) < 1e-11);
  }
}

TEST_CASE("K-Bessel is even in the order and both routes agree") {
  const ComplexPoint v{0.37, 1.3};
  CHECK(rel(bessel_k(v, 0.9), bessel_k(-v, 0.9)) < 1e-13);
  const AccuracyBudget b;
  CHECK(rel(detail::bessel_k_series(v, 0.9, b), detail::bessel_k_integral(v, 0.9, b)) < 1e-12);
}

TEST_CASE("theta and its Jacobi transformation") {
  for (const double t : {0.05, 0.3, 1.0, 2.7, 20.0}) {
    CHECK(std::abs(theta(t) - oracle::theta(t)) < 1e-14 * std::max(1.0, oracle::theta(t)));
    CHECK(std::abs(theta_direct(t) - theta_direct(1.0 / t) / std::sqrt(t)) < 1e-12);
  }
  CHECK(theta_truncation(1.0, 1e-16) <= 4);
  CHECK_THROWS_AS(theta(0.0), DomainError);
}
