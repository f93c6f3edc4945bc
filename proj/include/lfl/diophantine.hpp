#pragma once

// Sums of three squares: Gauss's criterion, explicit enumeration, and a
// demonstration (not a test) of the equidistribution of x/sqrt(n) on the sphere.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace lfl {

using Triple = std::array<std::int64_t, 3>;

/// All (x, y, z) with x^2 + y^2 + z^2 = n, signs and orders included, in
/// lexicographic order. n <= 10^6.
std::vector<Triple> three_squares_solutions(std::uint64_t n);

/// n is a sum of three squares iff n is not of the form 4^a (8b + 7).
bool gauss_condition(std::uint64_t n);

/// The solutions of n scaled onto the unit sphere.
struct SpherePointSet {
  std::uint64_t n = 0;
  std::vector<std::array<double, 3>> points;
};
SpherePointSet sphere_points(std::uint64_t n);

/// Demo-grade discrepancy: the largest |fraction of points in cap - cap area
/// fraction| over `caps` random caps {x : <x, c> >= h}, with centres uniform
/// on the sphere and heights uniform in (-1, 1), from a fixed-seed generator.
/// Throws DomainError when n has no representation.
double dn_discrepancy(std::uint64_t n, int caps, std::uint64_t seed = 20240601);

/// CSV rows x,y,z,ux,uy,uz for the solutions of n.
void write_three_squares_csv(std::ostream& out, std::uint64_t n);

}  // namespace lfl
