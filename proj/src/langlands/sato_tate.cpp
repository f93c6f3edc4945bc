#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include <boost/multiprecision/cpp_int.hpp>

#include "lfl/langlands.hpp"
#include "lfl/modular_forms.hpp"
#include "lfl/primes.hpp"
#include "lfl/quadrature.hpp"

namespace lfl {
namespace {

using BigInt = boost::multiprecision::cpp_int;

BigInt to_big(Int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt b = static_cast<std::uint64_t>(u >> 64);
  b <<= 64;
  b += static_cast<std::uint64_t>(u);
  return negative ? BigInt(-b) : b;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::vector<PrimeCoefficient> up_to(std::span<const PrimeCoefficient> coeffs, std::uint32_t X) {
  std::vector<PrimeCoefficient> out;
  for (const auto& c : coeffs) {
    if (c.p <= X) out.push_back(c);
  }
  if (out.empty()) throw DomainError("no prime coefficients up to X");
  return out;
}

}  // namespace

std::vector<PrimeCoefficient> delta_prime_coefficients(std::uint32_t X) {
  if (X < 2 || X > kSieveLimit) throw DomainError("delta_prime_coefficients: X must lie in [2, 10^6]");
  const std::vector<Int128> tau = ramanujan_tau(X);
  std::vector<PrimeCoefficient> out;
  for (const std::uint32_t p : primes_up_to(X)) {
    out.push_back({p, static_cast<double>(tau[p]) / std::pow(static_cast<double>(p), 5.5), tau[p]});
  }
  return out;
}

double semicircle_moment(int m) {
  if (m < 0 || m > 20) throw DomainError("semicircle_moment: m must lie in [0, 20]");
  // x = 2 cos t turns the measure into (2/pi) sin^2 t dt on [0, pi].
  const auto f = [m](double t) {
    const double s = std::sin(t);
    return (2.0 / kPi) * std::pow(2.0 * std::cos(t), m) * s * s;
  };
  return quad::adaptive(f, 0.0, kPi, 1e-15).value.real();
}

SatoTateResult sato_tate_report(std::span<const PrimeCoefficient> coeffs, std::uint32_t X, int m_max,
                                int bins, double tolerance) {
  if (m_max < 0 || m_max > 20) throw DomainError("sato_tate_report: m_max must lie in [0, 20]");
  if (bins < 1) throw DomainError("sato_tate_report: bins must be positive");
  const std::vector<PrimeCoefficient> data = up_to(coeffs, X);
  SatoTateResult r;
  r.primes = data.size();
  const double count = static_cast<double>(data.size());
  r.report = VerificationReport("sato-tate-moments",
                                "X=" + std::to_string(X) + " m=0.." + std::to_string(m_max), tolerance);
  for (int m = 0; m <= m_max; ++m) {
    double sum = 0.0;
    for (const auto& c : data) sum += std::pow(c.normalized, m);
    const MomentRow row{m, sum / count, semicircle_moment(m)};
    r.moments.push_back(row);
    r.report.record("m=" + std::to_string(m), std::abs(row.empirical - row.target));
  }

  const double width = kPi / bins;
  std::vector<std::size_t> hist(static_cast<std::size_t>(bins), 0);
  for (const auto& c : data) {
    if (std::abs(c.normalized) > 2.0) {
      ++r.out_of_range;
      continue;
    }
    const double theta = std::acos(c.normalized / 2.0);
    const auto b = std::min<std::size_t>(static_cast<std::size_t>(theta / width), hist.size() - 1);
    ++hist[b];
  }
  double l2 = 0.0;
  for (int b = 0; b < bins; ++b) {
    const double lo = b * width;
    const double hi = lo + width;
    // (1/width) int_lo^hi (2/pi) sin^2 t dt.
    const auto F = [](double t) { return (t - std::sin(2.0 * t) / 2.0) / kPi; };
    HistogramBin bin{lo + width / 2.0, static_cast<double>(hist[static_cast<std::size_t>(b)]) / (count * width),
                     (F(hi) - F(lo)) / width};
    l2 += (bin.empirical_density - bin.target_density) * (bin.empirical_density - bin.target_density) * width;
    r.histogram.push_back(bin);
  }
  r.discrepancy = std::sqrt(l2);
  return r;
}

void write_moments_csv(std::ostream& out, const SatoTateResult& r) {
  out << "# empirical = S_m(X)/pi(X) = mean of a_p^m over primes p <= X; target = (1/2pi) int x^m sqrt(4-x^2) dx\n";
  out << "m,empirical,target\n";
  for (const auto& row : r.moments) {
    out << row.m << ',' << format_double(row.empirical) << ',' << format_double(row.target) << '\n';
  }
}

void write_histogram_csv(std::ostream& out, const SatoTateResult& r) {
  out << "# theta_p = arccos(a_p/2); target density (2/pi) sin^2 theta averaged over the bin\n";
  out << "bin_center,empirical_density,target_density\n";
  for (const auto& b : r.histogram) {
    out << format_double(b.center) << ',' << format_double(b.empirical_density) << ','
        << format_double(b.target_density) << '\n';
  }
}

RamanujanResult ramanujan_kim_sarnak_check(std::span<const PrimeCoefficient> coeffs, std::uint32_t X,
                                           int weight) {
  if (weight < 1) throw DomainError("ramanujan_kim_sarnak_check: weight must be positive");
  const std::vector<PrimeCoefficient> data = up_to(coeffs, X);
  RamanujanResult r;
  r.report = VerificationReport("ramanujan-kim-sarnak", "p<=" + std::to_string(X), 0.0);
  r.min_log_margin = std::numeric_limits<double>::infinity();
  for (const auto& c : data) {
    bool within;
    if (c.exact) {
      // a_p^2 <= 4 p^{k-1} in exact integers.
      const BigInt a = to_big(*c.exact);
      within = a * a <= 4 * boost::multiprecision::pow(BigInt(c.p), weight - 1);
    } else {
      within = std::abs(c.normalized) <= 2.0;
    }
    const double abs_ap = std::abs(c.normalized);
    r.max_abs_ap = std::max(r.max_abs_ap, abs_ap);
    const std::string label = "p=" + std::to_string(c.p);
    if (!within) {
      ++r.violations;
      r.report.record(label, std::max(abs_ap - 2.0, std::numeric_limits<double>::min()));
    } else {
      r.report.record(label, 0.0);
    }
    const double log_alpha = std::log(std::abs(satake_from_ap(c.normalized, c.p).alphas[0]));
    r.min_log_margin = std::min(r.min_log_margin, (7.0 / 64.0) * std::log(c.p) - std::abs(log_alpha));
  }
  return r;
}

double sarnak_polynomial(double x) {
  const double x2 = x * x;
  return x2 * (4.0 - x2) * (x2 - 1.0);
}

SarnakResult sarnak_integrality_test(std::span<const PrimeCoefficient> coeffs, std::uint32_t X) {
  const std::vector<PrimeCoefficient> data = up_to(coeffs, X);
  SarnakResult r;
  r.semicircle_integral = -semicircle_moment(6) + 5.0 * semicircle_moment(4) - 4.0 * semicircle_moment(2);
  r.report = VerificationReport("sarnak-integrality", "p<=" + std::to_string(X), 1e-10);
  r.report.record("int P dmu_ST", std::abs(r.semicircle_integral - 1.0));
  double normalized_sum = 0.0;
  double integer_sum = 0.0;
  for (const auto& c : data) {
    normalized_sum += sarnak_polynomial(c.normalized);
    if (!c.exact) continue;
    const BigInt n = to_big(*c.exact);
    const BigInt n2 = n * n;
    const BigInt value = n2 * (4 - n2) * (n2 - 1);
    integer_sum += value.convert_to<double>();
    if (value > 0) {
      ++r.positive_integer_values;
      r.report.fail("P(a_" + std::to_string(c.p) + ") > 0");
    }
  }
  const double count = static_cast<double>(data.size());
  r.normalized_average = normalized_sum / count;
  r.integer_average = integer_sum / count;
  return r;
}

}  // namespace lfl
