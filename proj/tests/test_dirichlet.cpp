#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "lfl/dirichlet.hpp"
#include "lfl/zeta.hpp"
#include "oracles.hpp"

using namespace lfl;

TEST_CASE("character group sizes and principal first") {
  for (std::uint32_t N : {1u, 2u, 3u, 4u, 8u, 12u, 15u, 16u, 100u, 97u}) {
    const auto chars = characters_mod(N);
    std::uint32_t phi = 0;
    for (std::uint32_t r = 1; r <= N; ++r) phi += std::gcd(r, N) == 1;
    CHECK(chars.size() == phi);
    CHECK(chars.front().is_principal());
    for (std::size_t i = 0; i < chars.size(); ++i) {
      for (std::size_t j = i + 1; j < chars.size(); ++j) CHECK_FALSE(chars[i] == chars[j]);
    }
  }
  CHECK_THROWS_AS(characters_mod(0), DomainError);
}

TEST_CASE("multiplicativity and orthogonality") {
  const auto chars = characters_mod(24);
  for (const auto& chi : chars) {
    for (int m = 0; m < 24; ++m) {
      for (int n = 0; n < 24; ++n) CHECK(std::abs(chi(m * n) - chi(m) * chi(n)) < 1e-14);
    }
  }
  for (std::size_t i = 0; i < chars.size(); ++i) {
    for (std::size_t j = 0; j < chars.size(); ++j) {
      ComplexPoint sum{};
      for (int n = 0; n < 24; ++n) sum += chars[i](n) * std::conj(chars[j](n));
      CHECK(std::abs(sum - (i == j ? 8.0 : 0.0)) < 1e-13);
    }
  }
}

TEST_CASE("conductors and primitivity") {
  const auto mod4 = characters_mod(4);
  CHECK(is_primitive(mod4[1]) == std::pair<bool, std::uint32_t>{true, 4});
  CHECK(mod4[0].conductor() == 1);
  const auto induced = mod4[1].induce(12);
  CHECK(induced.conductor() == 4);
  CHECK_FALSE(induced.is_primitive());
  CHECK_FALSE(mod4[1].is_even());
  CHECK(mod4[1].conjugate() == mod4[1]);
  // Mod 8 has two primitive characters (the ones of conductor 8).
  int primitive8 = 0;
  for (const auto& chi : characters_mod(8)) primitive8 += chi.is_primitive();
  CHECK(primitive8 == 2);
  CHECK_THROWS_AS(mod4[1].induce(6), DomainError);
  CHECK_THROWS_AS(DirichletCharacter(4, 2, {0, 0, -1, 0}), DomainError);
}

TEST_CASE("Gauss sums of primitive characters have modulus sqrt(N)") {
  for (std::uint32_t N : {3u, 4u, 5u, 7u, 8u, 11u, 15u, 49u}) {
    for (const auto& chi : characters_mod(N)) {
      if (!chi.is_primitive()) continue;
      CHECK(std::abs(std::abs(gauss_sum(chi)) - std::sqrt(double(N))) < 1e-12);
    }
  }
  // Quadratic character mod 4: g = 2i.
  CHECK(std::abs(gauss_sum(characters_mod(4)[1]) - ComplexPoint(0.0, 2.0)) < 1e-14);
}

TEST_CASE("L-values") {
  const auto chi4 = characters_mod(4)[1];
  CHECK(std::abs(dirichlet_l(1.0, chi4, 1000) - oracle::pi / 4.0) < 1e-10);
  // Catalan's constant.
  CHECK(std::abs(dirichlet_l(2.0, chi4, 1000) - 0.915965594177219015) < 1e-12);
  // Principal character mod 2 is (1 - 2^{-s}) zeta(s).
  const ComplexPoint s{0.5, 6.0};
  const auto chi2 = characters_mod(2)[0];
  CHECK(std::abs(dirichlet_l(s, chi2, 2000) - (1.0 - std::exp(-s * std::log(2.0))) * oracle::zeta(s)) < 1e-9);
  CHECK(std::abs(dirichlet_l(s, characters_mod(1)[0], 10) - zeta(s)) < 1e-15);
  CHECK_THROWS_AS(dirichlet_l(1.0, chi2, 100), PoleError);
  CHECK_THROWS_AS(dirichlet_l(-0.5, chi4, 100), DomainError);
  CHECK_THROWS_AS(dirichlet_l(ComplexPoint(0.5, 900.0), chi4, 4, 1e-14), BudgetExceeded);
}
