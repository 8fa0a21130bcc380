#pragma once

#include "aobound/bigint.hpp"
#include "aobound/magnitude.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace aobound {

/// All primes up to `limit`, strictly increasing.
struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;

  /// pi(x) for x <= limit.
  std::size_t count_up_to(std::uint64_t x) const;
  bool contains(std::uint64_t x) const;
};

/// Sieve of Eratosthenes; limit >= 2.
PrimeTable sieve_primes(std::uint64_t limit);

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(std::uint64_t n);
/// Smallest prime strictly greater than n (n < 2^63).
std::uint64_t next_prime_u64(std::uint64_t n);

struct DensityCheck {
  bool holds = true;
  /// Smallest x in [2, limit] with pi(x) <= c x^(1-eps), when one exists.
  std::optional<std::uint64_t> first_failure;
  /// Number of x at which the Magnitude comparison overlapped and the exact
  /// integer comparison decided instead.
  std::size_t exact_fallbacks = 0;
};

/// Checks pi(x) > c * x^(1 - eps) for every integer 2 <= x <= limit.
/// eps in (0, 1/2), c in (0, 1].
DensityCheck check_prime_density(const Rational& eps, const Rational& c,
                                 std::uint64_t limit,
                                 unsigned bits = kDefaultPrecisionBits);

bool verify_prime_density(const Rational& eps, const Rational& c,
                          std::uint64_t limit,
                          unsigned bits = kDefaultPrecisionBits);

}  // namespace aobound
