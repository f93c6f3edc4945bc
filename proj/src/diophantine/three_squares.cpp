#include "lfl/diophantine.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

#include "lfl/core.hpp"

namespace lfl {
namespace {

std::int64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > static_cast<std::int64_t>(n)) --r;
  while ((r + 1) * (r + 1) <= static_cast<std::int64_t>(n)) ++r;
  return r;
}

// Uniform double in [0, 1) from the top 53 bits; the standard distributions
// are implementation-defined, this keeps output identical across toolchains.
double unit_uniform(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

}  // namespace

std::vector<Triple> three_squares_solutions(std::uint64_t n) {
  if (n == 0 || n > 1'000'000) throw DomainError("three_squares_solutions: n must lie in [1, 10^6]");
  std::vector<Triple> out;
  const std::int64_t r = isqrt(n);
  const auto target = static_cast<std::int64_t>(n);
  for (std::int64_t x = -r; x <= r; ++x) {
    const std::int64_t rest = target - x * x;
    const std::int64_t ry = isqrt(static_cast<std::uint64_t>(rest));
    for (std::int64_t y = -ry; y <= ry; ++y) {
      const std::int64_t z2 = rest - y * y;
      const std::int64_t z = isqrt(static_cast<std::uint64_t>(z2));
      if (z * z != z2) continue;
      if (z == 0) {
        out.push_back({x, y, 0});
      } else {
        out.push_back({x, y, -z});
        out.push_back({x, y, z});
      }
    }
  }
  return out;
}

bool gauss_condition(std::uint64_t n) {
  if (n == 0) throw DomainError("gauss_condition: n must be positive");
  while (n % 4 == 0) n /= 4;
  return n % 8 != 7;
}

SpherePointSet sphere_points(std::uint64_t n) {
  SpherePointSet set{n, {}};
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (const auto& t : three_squares_solutions(n)) {
    set.points.push_back({t[0] * scale, t[1] * scale, t[2] * scale});
  }
  return set;
}

double dn_discrepancy(std::uint64_t n, int caps, std::uint64_t seed) {
  if (caps < 1) throw DomainError("dn_discrepancy: caps must be positive");
  const SpherePointSet set = sphere_points(n);
  if (set.points.empty()) throw DomainError("dn_discrepancy: n is not a sum of three squares");
  std::mt19937_64 gen(seed);
  double worst = 0.0;
  for (int c = 0; c < caps; ++c) {
    // Uniform centre: normalized Gaussian vector via Box-Muller.
    std::array<double, 3> centre{};
    double norm = 0.0;
    do {
      for (auto& v : centre) {
        const double u1 = 1.0 - unit_uniform(gen);
        const double u2 = unit_uniform(gen);
        v = std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
      }
      norm = std::sqrt(centre[0] * centre[0] + centre[1] * centre[1] + centre[2] * centre[2]);
    } while (norm < 1e-12);
    const double h = 2.0 * unit_uniform(gen) - 1.0;
    std::size_t inside = 0;
    for (const auto& p : set.points) {
      if ((p[0] * centre[0] + p[1] * centre[1] + p[2] * centre[2]) / norm >= h) ++inside;
    }
    // Archimedes: the cap {<x, c> >= h} has area fraction (1 - h)/2.
    const double empirical = static_cast<double>(inside) / static_cast<double>(set.points.size());
    worst = std::max(worst, std::abs(empirical - (1.0 - h) / 2.0));
  }
  return worst;
}

void write_three_squares_csv(std::ostream& out, std::uint64_t n) {
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  out << "# integer solutions of x^2 + y^2 + z^2 = n and their projections (x, y, z)/sqrt(n)\n";
  out << "x,y,z,ux,uy,uz\n";
  char buf[96];
  for (const auto& t : three_squares_solutions(n)) {
    std::snprintf(buf, sizeof buf, "%.15g,%.15g,%.15g", t[0] * scale, t[1] * scale, t[2] * scale);
    out << t[0] << ',' << t[1] << ',' << t[2] << ',' << buf << '\n';
  }
}

}  // namespace lfl
