#include "aobound/primes.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace aobound;

TEST_CASE("sieve matches trial division") {
  const auto t = sieve_primes(20000);
  std::size_t count = 0;
  for (std::uint64_t n = 0; n <= 20000; ++n) {
    const bool p = oracle::is_prime_trial(n);
    if (p) ++count;
    CHECK(t.contains(n) == p);
    if (n % 997 == 0) CHECK(t.count_up_to(n) == count);
  }
  CHECK(t.primes.size() == 2262);
  CHECK_THROWS_AS(sieve_primes(1), DomainError);
}

TEST_CASE("Miller-Rabin agrees with trial division and known primes") {
  for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime_u64(n) == oracle::is_prime_trial(n));
  CHECK(is_prime_u64(18446744073709551557ULL));  // largest 64-bit prime
  CHECK_FALSE(is_prime_u64(3215031751ULL));       // strong pseudoprime to 2, 3, 5, 7
  CHECK(next_prime_u64(65536) == 65537);
  CHECK(next_prime_u64(1) == 2);
  CHECK(next_prime_u64(13) == 17);
}

TEST_CASE("prime density holds for the chosen constants") {
  const auto r = check_prime_density(Rational(1, 4), Rational(1, 2), 100000);
  CHECK(r.holds);
  CHECK_FALSE(r.first_failure);
}

TEST_CASE("prime density with c = 1 fails at the first x where pi(x) <= x^(3/4)") {
  const auto r = check_prime_density(Rational(1, 4), Rational(1), 100);
  CHECK_FALSE(r.holds);
  REQUIRE(r.first_failure);
  // Oracle: scan x upward comparing pi(x)^4 with x^3.
  std::uint64_t expect = 0, pi = 0;
  for (std::uint64_t x = 2; x <= 100 && expect == 0; ++x) {
    if (oracle::is_prime_trial(x)) ++pi;
    if (pi * pi * pi * pi <= x * x * x) expect = x;
  }
  CHECK(*r.first_failure == expect);
  CHECK(expect == 2);
}

TEST_CASE("prime density first failure agrees with a brute-force scan for other constants") {
  for (const auto& [num, den] : {std::pair{3, 4}, std::pair{9, 10}, std::pair{2, 3}}) {
    const Rational c(num, den);
    const auto r = check_prime_density(Rational(1, 4), c, 3000);
    std::optional<std::uint64_t> expect;
    std::uint64_t pi = 0;
    for (std::uint64_t x = 2; x <= 3000 && !expect; ++x) {
      if (oracle::is_prime_trial(x)) ++pi;
      // pi <= c x^(3/4)  <=>  (pi den)^4 <= num^4 x^3
      const Integer lhs = ipow(Integer(pi * den), 4);
      const Integer rhs = ipow(Integer(num), 4) * ipow(Integer(x), 3);
      if (lhs <= rhs) expect = x;
    }
    CHECK(r.first_failure == expect);
    CHECK(r.holds == !expect);
  }
}

TEST_CASE("prime density rejects bad parameters") {
  CHECK_THROWS_AS(check_prime_density(Rational(0), Rational(1, 2), 10), DomainError);
  CHECK_THROWS_AS(check_prime_density(Rational(1, 2), Rational(1, 2), 10), DomainError);
  CHECK_THROWS_AS(check_prime_density(Rational(1, 4), Rational(0), 10), DomainError);
  CHECK_THROWS_AS(check_prime_density(Rational(1, 4), Rational(3, 2), 10), DomainError);
}
