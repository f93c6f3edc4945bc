#include "lfl/primes.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "lfl/core.hpp"

namespace lfl {
namespace {

struct Sieve {
  std::vector<bool> composite;
  std::vector<std::uint32_t> primes;
};

const Sieve& shared_sieve() {
  static std::once_flag once;
  static Sieve sieve;
  std::call_once(once, [] {
    sieve.composite.assign(kSieveLimit + 1, false);
    sieve.composite[0] = sieve.composite[1] = true;
    for (std::uint64_t i = 2; i * i <= kSieveLimit; ++i) {
      if (sieve.composite[i]) continue;
      for (std::uint64_t j = i * i; j <= kSieveLimit; j += i) sieve.composite[j] = true;
    }
    for (std::uint32_t i = 2; i <= kSieveLimit; ++i) {
      if (!sieve.composite[i]) sieve.primes.push_back(i);
    }
  });
  return sieve;
}

}  // namespace

std::span<const std::uint32_t> primes_up_to(std::uint32_t limit) {
  if (limit > kSieveLimit) {
    throw DomainError("primes_up_to: limit exceeds sieve bound " + std::to_string(kSieveLimit));
  }
  const auto& all = shared_sieve().primes;
  const auto end = std::upper_bound(all.begin(), all.end(), limit);
  return {all.data(), static_cast<std::size_t>(end - all.begin())};
}

std::size_t prime_count(std::uint32_t x) { return primes_up_to(x).size(); }

bool is_prime(std::uint64_t n) {
  if (n <= kSieveLimit) return !shared_sieve().composite[n];
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace lfl
