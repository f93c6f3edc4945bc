#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lfl/zeta.hpp"
#include "oracles.hpp"

using namespace lfl;

TEST_CASE("special values") {
  CHECK(std::abs(zeta(2.0) - oracle::pi * oracle::pi / 6.0) < 1e-12);
  CHECK(std::abs(zeta(4.0) - std::pow(oracle::pi, 4) / 90.0) < 1e-12);
  CHECK(std::abs(zeta(-1.0) + 1.0 / 12.0) < 1e-11);
  CHECK(std::abs(zeta(-3.0) - 1.0 / 120.0) < 1e-11);
  CHECK(zeta(0.0) == ComplexPoint(-0.5, 0.0));
  CHECK(zeta(-2.0) == ComplexPoint(0.0, 0.0));
  CHECK(zeta(-10.0) == ComplexPoint(0.0, 0.0));
}

TEST_CASE("poles") {
  CHECK_THROWS_AS(zeta(1.0), PoleError);
  CHECK_THROWS_AS(xi(0.0), PoleError);
  CHECK_THROWS_AS(xi(1.0), PoleError);
  CHECK_THROWS_AS(zeta(ComplexPoint(NAN, 0.0)), DomainError);
}

TEST_CASE("xi against the Euler-Maclaurin oracle") {
  for (const ComplexPoint s : {ComplexPoint(0.5, 14.134725141734693), ComplexPoint(2.0, 3.0),
                               ComplexPoint(0.8, 0.7), ComplexPoint(0.3, -9.0), ComplexPoint(4.0, 0.0)}) {
    const auto v = xi(s);
    CHECK(std::abs(v.value - oracle::xi(s)) < 1e-12 * std::max(1.0, std::abs(oracle::xi(s))));
    CHECK(v.attained_error < 1e-13);
  }
  // First nontrivial zero.
  CHECK(std::abs(zeta(ComplexPoint(0.5, 14.134725141734693))) < 1e-9);
}

TEST_CASE("functional equation xi(s) = xi(1-s)") {
  for (double sigma = -2.0; sigma <= 3.0; sigma += 0.5) {
    for (double t = -20.0; t <= 20.0; t += 4.5) {
      const ComplexPoint s{sigma, t};
      CHECK(std::abs(xi(s).value - xi(1.0 - s).value) < 1e-10);
    }
  }
}

TEST_CASE("half-plane evaluator agrees with the xi route and reports budget") {
  for (const ComplexPoint s : {ComplexPoint(0.25, 7.0), ComplexPoint(0.5, 1.0), ComplexPoint(3.0, -13.0)}) {
    CHECK(std::abs(zeta_halfplane(s, 200, 1e-13) - zeta(s)) < 1e-9);
    CHECK(std::abs(zeta_halfplane(s, 200, 1e-13) - oracle::zeta(s)) < 1e-11);
  }
  CHECK_THROWS_AS(zeta_halfplane(ComplexPoint(0.5, 500.0), 10, 1e-12), BudgetExceeded);
  CHECK_THROWS_AS(zeta_halfplane(-1.0, 100), DomainError);
  CHECK(zeta_halfplane_error(2.0, 1000) < zeta_halfplane_error(2.0, 100));
}

TEST_CASE("G-factor links zeta(s) and zeta(1-s)") {
  for (const ComplexPoint s : {ComplexPoint(-1.5, 2.0), ComplexPoint(0.25, 5.0), ComplexPoint(2.5, -1.0)}) {
    CHECK(std::abs(zeta(s) - g_factor(s) * zeta(1.0 - s)) < 1e-10 * std::max(1.0, std::abs(zeta(s))));
  }
  CHECK(std::abs(g_factor(-2.0)) < 1e-15);
}

TEST_CASE("convexity probe") {
  const auto p = convexity_probe(30.0, 0.1);
  CHECK(p.report.pass());
  CHECK(std::isfinite(p.sup_ratio));
  CHECK(p.sup_ratio > 0.1);
  CHECK(p.min_line_one > 0.0);
}

TEST_CASE("scattering ratio") {
  const ComplexPoint s{0.3, 2.0};
  CHECK(std::abs(scattering_ratio(s) - oracle::xi(s) / oracle::xi(s + 1.0)) < 1e-11);
}
