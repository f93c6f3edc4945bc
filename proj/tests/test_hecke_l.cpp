#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lfl/dirichlet.hpp"
#include "lfl/hecke_l.hpp"
#include "lfl/modular_forms.hpp"
#include "oracles.hpp"

using namespace lfl;

namespace {
const QExpansion& delta() {
  static const QExpansion d = delta_q_expansion(1100);
  return d;
}
}  // namespace

TEST_CASE("descriptor of Delta") {
  const auto desc = describe(delta());
  CHECK(desc.weight == 12.0);
  CHECK(desc.conductor == 1);
  CHECK(desc.gamma_shifts == std::vector<double>{5.5, 6.5});
  CHECK(std::abs(desc.normalized(2) - (-24.0 / std::pow(2.0, 5.5))) < 1e-15);
  CHECK_THROWS_AS(desc.normalized(0), DomainError);
  auto bad = desc;
  bad.sign = ComplexPoint(2.0, 0.0);
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("functional equation Phi(s) = Phi(12 - s) for Delta") {
  for (double sigma = -3.0; sigma <= 15.0; sigma += 2.25) {
    for (double t : {0.0, 2.5, -7.0, 15.0}) {
      const ComplexPoint s{sigma, t};
      const ComplexPoint a = phi_completed(s, delta());
      const ComplexPoint b = phi_completed(12.0 - s, delta());
      CHECK(std::abs(a - b) < 1e-12 * std::max(1.0, std::abs(a)));
    }
  }
}

TEST_CASE("Phi matches the Dirichlet side where it converges") {
  for (const ComplexPoint s : {ComplexPoint(10.0, 0.0), ComplexPoint(11.0, 3.0), ComplexPoint(12.5, -1.0)}) {
    // The truncated Dirichlet tail is about 1100^{6.5 - Re s} relative.
    const ComplexPoint direct = phi_dirichlet(s, delta(), 1100);
    CHECK(std::abs(phi_completed(s, delta()) - direct) < 1e-11 * std::abs(direct));
  }
  CHECK_THROWS_AS(phi_dirichlet(10.0, delta(), 5000), DomainError);
}

TEST_CASE("theta gives pi^{-s} Gamma(s) zeta(2s)") {
  const auto th = theta_q_expansion(2000);
  for (const ComplexPoint s : {ComplexPoint(2.0, 0.0), ComplexPoint(0.75, 4.0), ComplexPoint(0.3, 2.5)}) {
    const ComplexPoint expect = std::exp(-s * std::log(oracle::pi)) * oracle::gamma(s) * oracle::zeta(2.0 * s);
    CHECK(std::abs(phi_completed(s, th) - expect) < 1e-11 * std::abs(expect));
  }
  CHECK_THROWS_AS(phi_completed(0.0, th), PoleError);
  CHECK_THROWS_AS(phi_completed(0.5, th), PoleError);
}

TEST_CASE("Phi decays on vertical lines") {
  double prev = std::abs(phi_completed(ComplexPoint(6.0, 5.0), delta()));
  for (double t = 10.0; t <= 40.0; t += 5.0) {
    const double v = std::abs(phi_completed(ComplexPoint(6.0, t), delta()));
    CHECK(v < prev);
    prev = v;
  }
  CHECK(prev < 1e-8);
}

TEST_CASE("a wrong multiplier breaks the Dirichlet agreement") {
  auto desc = describe(delta());
  desc.multiplier = -1;
  const ComplexPoint s{10.0, 0.0};
  const ComplexPoint direct = phi_dirichlet(s, delta(), 1100);
  CHECK(std::abs(phi_completed(s, desc) - direct) > 1e-6 * std::abs(direct));
}

TEST_CASE("Euler product against the Dirichlet series") {
  double prev = 1.0;
  for (std::size_t X : {100u, 1000u}) {
    const auto r = euler_product_check(delta(), 3.0, X);
    CHECK(r.pass());
    CHECK(r.max_abs_error() < prev);
    prev = r.max_abs_error();
  }
  // One Euler factor equals the Dirichlet series over the powers of 2.
  const auto desc = describe(delta());
  const ComplexPoint s{6.0, 1.0};
  ComplexPoint powers{};
  for (std::size_t n = 1; n <= 1024; n *= 2) powers += desc.normalized(n) * std::exp(-s * std::log(double(n)));
  CHECK(std::abs(normalized_euler_partial(delta(), s, 2) - powers) < 1e-15);
  // Hecke relation at p = 2: lambda(4) = lambda(2)^2 - 1.
  CHECK(std::abs(desc.normalized(4) - (desc.normalized(2) * desc.normalized(2) - 1.0)) < 1e-14);
  CHECK_THROWS_AS(euler_product_check(delta(), 1.2, 100), DomainError);
  CHECK_THROWS_AS(euler_product_check(delta(), 2.0, 5000), DomainError);
}

TEST_CASE("Weil's twisted functional equation") {
  const auto d = delta_q_expansion(20000);
  // Modulus 1: the untwisted equation.
  const auto r1 = weil_twist_check(d, characters_mod(1)[0], ComplexPoint(8.0, 0.5));
  CHECK(r1.pass());
  CHECK(r1.max_abs_error() < 1e-10);
  for (std::uint32_t r : {3u, 4u, 5u}) {
    for (const auto& chi : characters_mod(r)) {
      if (!chi.is_primitive()) continue;
      const auto rep = weil_twist_check(d, chi, ComplexPoint(8.5, -1.0));
      CHECK(rep.pass());
      CHECK(rep.max_abs_error() < 1e-10);
    }
  }
  CHECK_THROWS_AS(weil_twist_check(d, characters_mod(4)[0], 8.0), DomainError);
  CHECK_THROWS_AS(weil_twist_check(d, characters_mod(4)[1], 6.0), DomainError);
  CHECK_THROWS_AS(weil_twist_check(theta_q_expansion(100), characters_mod(4)[1], 8.0), DomainError);
}
