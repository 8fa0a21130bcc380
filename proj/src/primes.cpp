#include "aobound/primes.hpp"

#include <algorithm>

namespace aobound {

std::size_t PrimeTable::count_up_to(std::uint64_t x) const {
  if (x > limit) throw DomainError("pi(x) requested beyond the sieve limit");
  return static_cast<std::size_t>(
      std::upper_bound(primes.begin(), primes.end(), x) - primes.begin());
}

bool PrimeTable::contains(std::uint64_t x) const {
  return std::binary_search(primes.begin(), primes.end(), x);
}

PrimeTable sieve_primes(std::uint64_t limit) {
  if (limit < 2) throw DomainError("sieve limit must be at least 2");
  std::vector<bool> composite(limit + 1, false);
  PrimeTable table;
  table.limit = limit;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    table.primes.push_back(i);
    if (i > limit / i) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return table;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::uint64_t next_prime_u64(std::uint64_t n) {
  if (n >= (std::uint64_t{1} << 63)) throw DomainError("next_prime_u64 argument too large");
  std::uint64_t candidate = n + 1;
  while (!is_prime_u64(candidate)) ++candidate;
  return candidate;
}

namespace {

struct DensityEvaluator {
  Rational exponent;  // 1 - eps
  Rational c;
  Magnitude c_mag;
  unsigned bits;
  std::size_t fallbacks = 0;

  // pi(x) = count > c x^exponent ?
  bool holds(std::uint64_t count, std::uint64_t x) {
    const Magnitude lhs = Magnitude::from_integer(Integer(count), bits);
    const Magnitude rhs = mag_mul(
        c_mag, mag_pow(Magnitude::from_integer(Integer(x), bits), exponent, bits),
        bits);
    if (lhs.log2_low() > rhs.log2_high()) return true;
    if (lhs.log2_high() < rhs.log2_low()) return false;
    // Overlap: decide exactly.  count > c x^(a/b)  <=>  (count/c)^b > x^a.
    ++fallbacks;
    const unsigned long a = exponent.get_num().get_ui();
    const unsigned long b = exponent.get_den().get_ui();
    const Integer left = ipow(Integer(count) * c.get_den(), b);
    const Integer right = ipow(c.get_num(), b) * ipow(Integer(x), a);
    return left > right;
  }
};

}  // namespace

DensityCheck check_prime_density(const Rational& eps, const Rational& c,
                                 std::uint64_t limit, unsigned bits) {
  if (limit < 2) throw DomainError("density limit must be at least 2");
  if (eps <= 0 || eps >= Rational(1, 2))
    throw DomainError("density exponent eps must lie in (0, 1/2)");
  if (c <= 0 || c > 1) throw DomainError("density constant c must lie in (0, 1]");

  DensityEvaluator eval{Rational(1) - eps, c, Magnitude::from_rational(c, bits), bits};
  const PrimeTable table = sieve_primes(limit);
  const auto& ps = table.primes;

  DensityCheck result;
  // pi is constant on [p_k, p_{k+1} - 1] while c x^(1-eps) increases, so the
  // right end of each segment is the worst point.
  for (std::size_t k = 0; k < ps.size(); ++k) {
    const std::uint64_t first = ps[k];
    const std::uint64_t last = k + 1 < ps.size() ? ps[k + 1] - 1 : limit;
    const std::uint64_t count = k + 1;
    if (eval.holds(count, last)) continue;
    std::uint64_t lo = first;
    std::uint64_t hi = last;
    while (lo < hi) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      if (eval.holds(count, mid)) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    result.holds = false;
    result.first_failure = lo;
    break;
  }
  result.exact_fallbacks = eval.fallbacks;
  return result;
}

bool verify_prime_density(const Rational& eps, const Rational& c,
                          std::uint64_t limit, unsigned bits) {
  return check_prime_density(eps, c, limit, bits).holds;
}

}  // namespace aobound
