#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "lfl/suites.hpp"

using namespace lfl;

TEST_CASE("registry") {
  const std::vector<std::string> expected{"zeta-fe",     "jacobi",    "zeta-values",   "convexity",
                                          "tate",        "dirichlet", "modular-forms", "exact-arith",
                                          "hecke-fe",    "euler-product", "weil-twist", "mellin",
                                          "eisenstein",  "laplacian", "sato-tate",     "three-squares"};
  std::vector<std::string> names;
  for (const auto& s : suites()) names.push_back(s.name);
  CHECK(names == expected);
  CHECK(find_suite("jacobi") != nullptr);
  CHECK(find_suite("nosuch") == nullptr);
}

TEST_CASE("fast suites pass with unique report names") {
  std::set<std::string> seen;
  for (const char* name : {"jacobi", "tate", "dirichlet", "modular-forms", "exact-arith", "laplacian"}) {
    const auto reports = find_suite(name)->run({});
    CHECK_FALSE(reports.empty());
    for (const auto& r : reports) {
      CHECK_MESSAGE(r.pass(), r.check_name());
      CHECK(seen.insert(r.check_name()).second);
      CHECK(r.runtime_ms() == 0);
    }
  }
}

TEST_CASE("tolerance override applies to every report") {
  SuiteOptions o;
  o.tol = 1e-300;
  const auto reports = find_suite("jacobi")->run(o);
  for (const auto& r : reports) {
    CHECK(r.tolerance() == 1e-300);
    CHECK_FALSE(r.pass());
  }
}

TEST_CASE("runs are deterministic") {
  SuiteOptions o;
  o.X = 2000;
  const auto a = find_suite("sato-tate")->run(o);
  const auto b = find_suite("sato-tate")->run(o);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].to_json().dump() == b[i].to_json().dump());
}
