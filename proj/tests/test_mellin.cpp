#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lfl/hecke_l.hpp"
#include "lfl/mellin.hpp"
#include "lfl/modular_forms.hpp"
#include "lfl/special_fn.hpp"

using namespace lfl;

namespace {
const LSeriesDescriptor& theta_desc() {
  static const LSeriesDescriptor d = describe(theta_q_expansion(2000));
  return d;
}
const LSeriesDescriptor& delta_desc() {
  static const LSeriesDescriptor d = describe(delta_q_expansion(1000));
  return d;
}
}  // namespace

TEST_CASE("theta is recovered from its completed L-function") {
  const auto phi = phi_evaluator(theta_desc());
  for (double x : {0.8, 1.0, 1.5, 2.0}) {
    const auto r = reconstruct(theta_desc(), phi, x, ContourSpec{2.0, 40.0, 0, 1e-8});
    CHECK(std::abs(r.value - theta_direct(x)) < 1e-8);
    CHECK(r.tail_bound < 1e-8);
    CHECK(r.panels >= 4);
  }
}

TEST_CASE("Delta is recovered and the result is independent of c") {
  const auto phi = phi_evaluator(delta_desc());
  const auto dq = delta_q_expansion(1000);
  const double x = 1.2;
  const ComplexPoint expect = evaluate(dq, {0.0, x}).value;
  for (double c : {7.5, 8.0, 9.0}) {
    const auto r = reconstruct(delta_desc(), phi, x, ContourSpec{c, 60.0, 0, 1e-8});
    CHECK(std::abs(r.value - expect) < 1e-9);
  }
}

TEST_CASE("increasing T improves the reconstruction") {
  const auto phi = phi_evaluator(theta_desc());
  const double x = 1.0;
  const double e5 = std::abs(reconstruct(theta_desc(), phi, x, ContourSpec{2.0, 5.0, 0, 1.0}).value - theta_direct(x));
  const double e10 = std::abs(reconstruct(theta_desc(), phi, x, ContourSpec{2.0, 10.0, 0, 1.0}).value - theta_direct(x));
  CHECK(e10 * 10.0 < e5);
}

TEST_CASE("shifted contour plus residues agrees") {
  const auto phi = phi_evaluator(theta_desc());
  const ContourSpec spec{2.0, 40.0, 0, 1e-8};
  for (double x : {0.9, 1.7}) {
    CHECK(std::abs(reconstruct_shifted(theta_desc(), phi, x, spec).value -
                   reconstruct(theta_desc(), phi, x, spec).value) < 1e-8);
  }
}

TEST_CASE("modularity follows from the functional equation") {
  const auto phi = phi_evaluator(theta_desc());
  const ContourSpec spec{2.0, 40.0, 0, 1e-8};
  CHECK(modularity_from_fe(theta_desc(), phi, 0.6, spec) < 1e-7);
  // The same relation written out: f(i/x) = C x^k f(ix).
  const double x = 1.4;
  const auto a = reconstruct(theta_desc(), phi, x, spec).value;
  const auto b = reconstruct(theta_desc(), phi, 1.0 / x, spec).value;
  CHECK(std::abs(b - std::sqrt(x) * a) < 1e-7);
}

TEST_CASE("a non-modular Phi is detected") {
  // A factor that is not symmetric under s -> k - s spoils the relation.
  const auto good = phi_evaluator(theta_desc());
  const PhiEvaluator phi = [&](ComplexPoint s) { return good(s) * (1.0 + 0.01 * s); };
  CHECK(modularity_from_fe(theta_desc(), phi, 0.6, ContourSpec{2.0, 40.0, 0, 1e-6}) > 1e-4);
}

TEST_CASE("contour validation") {
  const auto phi = phi_evaluator(theta_desc());
  CHECK_THROWS_AS(reconstruct(theta_desc(), phi, 1.0, ContourSpec{0.5, 40.0, 0, 1e-8}), DomainError);
  CHECK_THROWS_AS(reconstruct(theta_desc(), phi, -1.0, ContourSpec{}), DomainError);
  CHECK_THROWS_AS(reconstruct(theta_desc(), phi, 1.0, ContourSpec{2.0, -1.0, 0, 1e-8}), DomainError);
  CHECK_THROWS_AS(reconstruct(theta_desc(), phi, 1.0, ContourSpec{2.0, 3.0, 0, 1e-12}), BudgetExceeded);
}
