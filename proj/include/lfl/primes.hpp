#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace lfl {

/// Largest bound served by the shared sieve.
inline constexpr std::uint32_t kSieveLimit = 1'000'000;

/// All primes <= limit (limit <= kSieveLimit). Backed by a sieve of
/// Eratosthenes built once per process; the returned view stays valid for
/// the lifetime of the program.
std::span<const std::uint32_t> primes_up_to(std::uint32_t limit);

/// Primality for n <= kSieveLimit via the shared sieve, trial division above.
bool is_prime(std::uint64_t n);

/// pi(x): number of primes <= x (x <= kSieveLimit).
std::size_t prime_count(std::uint32_t x);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

}  // namespace lfl
