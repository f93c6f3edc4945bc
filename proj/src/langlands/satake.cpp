#include <cmath>

#include "lfl/langlands.hpp"
#include "lfl/primes.hpp"

namespace lfl {
namespace {

void require_prime(std::uint64_t p, const char* where) {
  if (!is_prime(p)) throw DomainError(std::string(where) + ": p must be prime");
}

// Products over multi-indices 0 <= i_1 <= ... <= i_k < n (strict when `strict`).
void monomials(const std::vector<ComplexPoint>& a, int k, std::size_t start, bool strict,
               ComplexPoint acc, std::vector<ComplexPoint>& out) {
  if (k == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = start; i < a.size(); ++i) {
    monomials(a, k - 1, strict ? i + 1 : i, strict, acc * a[i], out);
  }
}

}  // namespace

SatakeData satake_from_ap(double a_p, std::uint64_t p) {
  require_prime(p, "satake_from_ap");
  if (!std::isfinite(a_p)) throw DomainError("satake_from_ap: a_p must be finite");
  SatakeData d{p, {}};
  const double disc = a_p * a_p - 4.0;
  if (disc <= 0.0) {
    // Unit circle: alpha = a/2 + i sqrt(4 - a^2)/2, beta its conjugate.
    const ComplexPoint alpha{a_p / 2.0, std::sqrt(-disc) / 2.0};
    d.alphas = {alpha, std::conj(alpha)};
  } else {
    const double alpha = std::copysign((std::abs(a_p) + std::sqrt(disc)) / 2.0, a_p);
    d.alphas = {alpha, 1.0 / alpha};
  }
  return d;
}

SatakeData trivial_satake(std::uint64_t p) {
  require_prime(p, "trivial_satake");
  return {p, {ComplexPoint(1.0, 0.0)}};
}

ComplexPoint euler_factor(std::span<const ComplexPoint> monomials, std::uint64_t p, ComplexPoint s) {
  const ComplexPoint ps = std::exp(-s * std::log(static_cast<double>(p)));
  ComplexPoint product{1.0, 0.0};
  for (const auto& m : monomials) product *= 1.0 - m * ps;
  return 1.0 / product;
}

ComplexPoint standard_local(const SatakeData& d, ComplexPoint s) {
  return euler_factor(d.alphas, d.p, s);
}

std::vector<ComplexPoint> sym_power_monomials(const SatakeData& d, int k) {
  if (d.degree() != 2) throw DomainError("sym_power_monomials: degree-2 data required");
  if (k < 1) throw DomainError("sym_power_monomials: k must be >= 1");
  std::vector<ComplexPoint> out;
  for (int j = 0; j <= k; ++j) out.push_back(std::pow(d.alphas[0], j) * std::pow(d.alphas[1], k - j));
  return out;
}

std::vector<ComplexPoint> sym_power_monomials_gln(const SatakeData& d, int k) {
  if (k < 1 || d.degree() == 0) throw DomainError("sym_power_monomials_gln: k >= 1 and non-empty data");
  std::vector<ComplexPoint> out;
  monomials(d.alphas, k, 0, false, 1.0, out);
  return out;
}

std::vector<ComplexPoint> ext_power_monomials(const SatakeData& d, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > d.degree()) {
    throw DomainError("ext_power_monomials: need 1 <= k <= degree");
  }
  std::vector<ComplexPoint> out;
  monomials(d.alphas, k, 0, true, 1.0, out);
  return out;
}

std::vector<ComplexPoint> rankin_selberg_monomials(const SatakeData& d1, const SatakeData& d2) {
  if (d1.p != d2.p) throw DomainError("rankin_selberg: local data at different primes");
  std::vector<ComplexPoint> out;
  for (const auto& a : d1.alphas) {
    for (const auto& b : d2.alphas) out.push_back(a * b);
  }
  return out;
}

ComplexPoint sym_power_local(const SatakeData& d, int k, ComplexPoint s) {
  return euler_factor(sym_power_monomials(d, k), d.p, s);
}

ComplexPoint sym_power_local_gln(const SatakeData& d, int k, ComplexPoint s) {
  return euler_factor(sym_power_monomials_gln(d, k), d.p, s);
}

ComplexPoint ext_power_local(const SatakeData& d, int k, ComplexPoint s) {
  return euler_factor(ext_power_monomials(d, k), d.p, s);
}

ComplexPoint rankin_selberg_local(const SatakeData& d1, const SatakeData& d2, ComplexPoint s) {
  return euler_factor(rankin_selberg_monomials(d1, d2), d1.p, s);
}

}  // namespace lfl
