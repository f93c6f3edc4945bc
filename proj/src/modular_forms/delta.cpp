#include <mutex>

#include "lfl/modular_forms.hpp"

namespace lfl {
namespace {

struct TauCache {
  std::mutex mutex;
  std::vector<Int128> tau;  // tau[0..M]
};

TauCache& cache() {
  static TauCache c;
  return c;
}

// tau(0..M) by multiplying the sparse series prod (1 - q^n)^3
//   = sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2}
// into itself eight times.
std::vector<Int128> compute_tau(std::size_t M) {
  std::vector<std::pair<std::size_t, Int128>> sparse;
  for (std::size_t k = 0; k * (k + 1) / 2 + 1 <= M; ++k) {
    sparse.emplace_back(k * (k + 1) / 2, (k % 2 == 0 ? 1 : -1) * static_cast<Int128>(2 * k + 1));
  }
  // power[j] = coefficient of q^j in the running product, j < M.
  const std::size_t len = M;  // Delta/q needs exponents 0..M-1
  std::vector<Int128> power(len, 0);
  for (const auto& [e, c] : sparse) {
    if (e < len) power[e] = c;
  }
  std::vector<Int128> next(len);
  for (int step = 1; step < 8; ++step) {
    for (std::size_t j = 0; j < len; ++j) {
      Int128 acc = 0;
      for (const auto& [e, c] : sparse) {
        if (e > j) break;
        acc = checked_mul_add(c, power[j - e], acc);
      }
      next[j] = acc;
    }
    power.swap(next);
  }
  std::vector<Int128> tau(M + 1, 0);
  for (std::size_t n = 1; n <= M; ++n) tau[n] = power[n - 1];
  return tau;
}

}  // namespace

std::vector<Int128> ramanujan_tau(std::size_t M) {
  if (M > 1'000'000) throw DomainError("ramanujan_tau: M is capped at 10^6");
  auto& c = cache();
  std::lock_guard lock(c.mutex);
  if (c.tau.size() < M + 1) c.tau = compute_tau(M);
  return {c.tau.begin(), c.tau.begin() + static_cast<std::ptrdiff_t>(M + 1)};
}

QExpansion delta_q_expansion(std::size_t M) {
  if (M < 1) throw DomainError("delta_q_expansion: M must be positive");
  std::vector<Int128> tau = ramanujan_tau(M);
  std::vector<ComplexPoint> coeffs(tau.size());
  for (std::size_t n = 0; n < tau.size(); ++n) coeffs[n] = static_cast<double>(tau[n]);
  // Deligne: |tau(n)| <= d(n) n^{11/2} <= 2 sqrt(n) n^{11/2}.
  return QExpansion(12.0, 1.0, 1, std::move(coeffs), GrowthBound{2.0, 6.0}, std::move(tau));
}

}  // namespace lfl
