#pragma once

// Local zeta integrals over Q: the p-adic geometric-series factors, the
// archimedean Gaussian integral, and their assembled partial Euler product.

#include <cstdint>
#include <utility>

#include "lfl/core.hpp"

namespace lfl {

/// (truncated sum_{k=0}^{K} p^{-ks}, closed form (1 - p^{-s})^{-1}) for Re s > 0.
std::pair<ComplexPoint, ComplexPoint> local_factor_p(std::uint64_t p, ComplexPoint s, int K);

/// (int_R e^{-pi x^2} |x|^s dx/|x| by quadrature, pi^{-s/2} Gamma(s/2)),
/// for 0.2 <= Re s <= 6.
std::pair<ComplexPoint, ComplexPoint> archimedean_factor(ComplexPoint s);

/// prod_{p <= X} (1 - p^{-s})^{-1} for Re s > 1, X >= 2.
ComplexPoint euler_product_partial(ComplexPoint s, std::uint32_t X);

}  // namespace lfl
