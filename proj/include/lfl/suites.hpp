#pragma once

// Named verification suites shared by the command-line tool and the
// acceptance runner. Each suite returns its reports in a fixed order.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lfl/report.hpp"

namespace lfl {

/// Knobs a caller may override; unset fields keep each suite's defaults.
struct SuiteOptions {
  std::optional<double> tol;             ///< replaces every report tolerance
  std::optional<double> tmax;            ///< height of t-grids (zeta-fe, convexity)
  std::optional<std::uint32_t> terms;    ///< Dirichlet-series length (weil-twist)
  std::optional<std::uint32_t> X;        ///< prime cutoff (sato-tate)
  std::uint64_t seed = 20240601;         ///< random caps (three-squares demo)
};

struct Suite {
  std::string name;
  std::string description;
  std::function<std::vector<VerificationReport>(const SuiteOptions&)> run;
};

/// All suites in `verify all` order.
const std::vector<Suite>& suites();

/// Lookup by name; nullptr when unknown.
const Suite* find_suite(const std::string& name);

}  // namespace lfl
