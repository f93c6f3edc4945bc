#pragma once

#include <functional>

#include "lfl/core.hpp"

namespace lfl {

/// Integral of a homogeneous function over the plane outside the square
/// [-B, B]^2. `angular(c, s)` is the function on the unit circle
/// (c, s) = (cos t, sin t) and `degree` its (complex) homogeneity -p with
/// Re p > 2, so f(r c, r s) = r^{-p} angular(c, s). With B = R + 1/2 this is
/// the midpoint-rule estimate of a lattice sum over max(|m|,|n|) > R, with
/// error O(R^{-Re p}).
ComplexPoint homogeneous_tail(const std::function<ComplexPoint(double, double)>& angular,
                              ComplexPoint p, double B);

}  // namespace lfl
