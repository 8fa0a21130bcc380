#include "aobound/magnitude.hpp"

#include <map>
#include <mutex>

namespace aobound {

namespace {

// Guard bits carried by the fixed-point log evaluation beyond the target grid.
constexpr unsigned kGuardBits = 8;

// ln(Y / 2^W) in units of 2^-W for 2^W <= Y <= 2^(W+1), via
// ln y = 2 atanh((y-1)/(y+1)).  Every rounding step goes the requested way and
// the upper variant adds a bound for the truncated tail, so the result is a
// one-sided bound.  z <= 1/3 gives about 3 bits per term.
Integer ln_fixed(const Integer& y, unsigned w, bool upper) {
  const Integer scale = pow2(w);
  const Integer num = (y - scale) << w;
  const Integer den = y + scale;
  const Integer z = upper ? ceil_div(num, den) : floor_div(num, den);
  if (z == 0) return Integer(0);
  const Integer z2 = upper ? ceil_div(z * z, scale) : floor_div(z * z, scale);

  Integer sum = 0;
  Integer power = z;
  for (unsigned long k = 0;; ++k) {
    const Integer odd = 2 * k + 1;
    sum += upper ? ceil_div(power, odd) : floor_div(power, odd);
    power = upper ? ceil_div(power * z2, scale) : floor_div(power * z2, scale);
    if (power <= 1) {
      // Remaining terms sum to at most z^(2k+3)/((2k+3)(1-z^2)) <= power.
      if (upper) sum += power;
      break;
    }
  }
  return 2 * sum;
}

struct Ln2Fixed {
  Integer low;
  Integer high;
};

Ln2Fixed ln2_fixed(unsigned w) {
  static std::mutex mutex;
  static std::map<unsigned, Ln2Fixed> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(w);
  if (it != cache.end()) return it->second;
  const Integer two = pow2(w + 1);
  Ln2Fixed v{ln_fixed(two, w, false), ln_fixed(two, w, true)};
  cache.emplace(w, v);
  return v;
}

Rational dyadic(const Integer& num, unsigned w) {
  return make_rational(num, pow2(w));
}

// den is a power of two no larger than 2^bits.
bool denominator_fits(const Integer& den, unsigned bits) {
  const std::size_t len = bit_length(den);
  return len <= static_cast<std::size_t>(bits) + 1 && mpz_scan1(den.get_mpz_t(), 0) == len - 1;
}

}  // namespace

Rational round_down(const Rational& q, unsigned bits) {
  if (bits == kExactBits || denominator_fits(q.get_den(), bits)) return q;
  return dyadic(floor_div(q.get_num() << bits, q.get_den()), bits);
}

Rational round_up(const Rational& q, unsigned bits) {
  if (bits == kExactBits || denominator_fits(q.get_den(), bits)) return q;
  return dyadic(ceil_div(q.get_num() << bits, q.get_den()), bits);
}

Bracket ln2_bracket(unsigned bits) {
  const unsigned w = bits + kGuardBits;
  const Ln2Fixed l = ln2_fixed(w);
  return {round_down(dyadic(l.low, w), bits), round_up(dyadic(l.high, w), bits)};
}

Bracket pi_bracket() {
  static const Integer scale("100000000000000000000000000000000000000");
  static const Integer digits("314159265358979323846264338327950288419");
  return {make_rational(digits, scale), make_rational(digits + 1, scale)};
}

Bracket log2_bracket(const Integer& m, unsigned bits) {
  if (m <= 0) throw DomainError("log2 of a non-positive integer");
  const std::size_t e = bit_length(m) - 1;
  if (mpz_scan1(m.get_mpz_t(), 0) == e) return {Rational(Integer(e)), Rational(Integer(e))};

  const unsigned w = bits + kGuardBits;
  Integer y_low;
  Integer y_high;
  if (e >= w) {
    y_low = m >> (e - w);
    y_high = (y_low << (e - w)) == m ? y_low : y_low + 1;
  } else {
    y_low = m << (w - e);
    y_high = y_low;
  }
  const Integer scale = pow2(w);
  const Ln2Fixed l2 = ln2_fixed(w);
  const Integer frac_low = floor_div(ln_fixed(y_low, w, false) * scale, l2.high);
  const Integer frac_high = ceil_div(ln_fixed(y_high, w, true) * scale, l2.low);
  const Rational whole{Integer(e)};
  return {round_down(whole + dyadic(frac_low, w), bits),
          round_up(whole + dyadic(frac_high, w), bits)};
}

Bracket log2_bracket(const Rational& q, unsigned bits) {
  if (q <= 0) throw DomainError("log2 of a non-positive rational");
  const Bracket n = log2_bracket(q.get_num(), bits);
  const Bracket d = log2_bracket(q.get_den(), bits);
  return {n.low - d.high, n.high - d.low};
}

Magnitude Magnitude::from_log2(const Rational& low, const Rational& high,
                               unsigned bits) {
  if (low > high) throw DomainError("Magnitude bounds out of order");
  return Magnitude(round_down(low, bits), round_up(high, bits));
}

Magnitude Magnitude::power_of_two(const Rational& exponent, unsigned bits) {
  return from_log2(exponent, exponent, bits);
}

Magnitude Magnitude::from_integer(const Integer& m, unsigned bits) {
  if (m <= 0) throw DomainError("Magnitude of a non-positive integer");
  const Bracket b = log2_bracket(m, bits);
  return Magnitude(b.low, b.high);
}

Magnitude Magnitude::from_rational(const Rational& q, unsigned bits) {
  if (q <= 0) throw DomainError("Magnitude of a non-positive rational");
  const Bracket b = log2_bracket(q, bits);
  return Magnitude(b.low, b.high);
}

Magnitude Magnitude::from_value_bounds(const Rational& low, const Rational& high,
                                       unsigned bits) {
  if (low <= 0 || low > high)
    throw DomainError("Magnitude value bounds must satisfy 0 < low <= high");
  return Magnitude(log2_bracket(low, bits).low, log2_bracket(high, bits).high);
}

Magnitude mag_mul(const Magnitude& a, const Magnitude& b, unsigned bits) {
  return Magnitude::from_log2(a.log2_low() + b.log2_low(),
                              a.log2_high() + b.log2_high(), bits);
}

Magnitude mag_div(const Magnitude& a, const Magnitude& b, unsigned bits) {
  return Magnitude::from_log2(a.log2_low() - b.log2_high(),
                              a.log2_high() - b.log2_low(), bits);
}

Magnitude mag_inv(const Magnitude& a) {
  // Negation keeps denominators, so no rounding happens here.
  return Magnitude::from_log2(-a.log2_high(), -a.log2_low(), kExactBits);
}

Magnitude mag_pow(const Magnitude& a, const Rational& e, unsigned bits) {
  if (e >= 0)
    return Magnitude::from_log2(e * a.log2_low(), e * a.log2_high(), bits);
  return Magnitude::from_log2(e * a.log2_high(), e * a.log2_low(), bits);
}

namespace detail {

Bracket log2_factorial_stirling(unsigned long n, unsigned bits) {
  if (n < 2) return {Rational(0), Rational(0)};
  const unsigned w = bits + kGuardBits;
  const Bracket l2 = ln2_bracket(w);
  const Bracket log2n = log2_bracket(Integer(n), w);
  const Bracket ln_n{log2n.low * l2.low, log2n.high * l2.high};
  const Bracket pi = pi_bracket();
  const Bracket log2_two_pi_low = log2_bracket(Rational(2 * pi.low), w);
  const Bracket log2_two_pi_high = log2_bracket(Rational(2 * pi.high), w);
  const Bracket ln_two_pi{log2_two_pi_low.low * l2.low,
                          log2_two_pi_high.high * l2.high};
  const Rational nn{Integer(n)};
  // Robbins: ln n! = n ln n - n + ln(2 pi n)/2 + r, 1/(12n+1) < r < 1/(12n).
  const Rational ln_low = nn * ln_n.low - nn + (ln_two_pi.low + ln_n.low) / 2 +
                          Rational(1) / (12 * nn + 1);
  const Rational ln_high = nn * ln_n.high - nn +
                           (ln_two_pi.high + ln_n.high) / 2 +
                           Rational(1) / (12 * nn);
  return {round_down(ln_low / l2.high, bits), round_up(ln_high / l2.low, bits)};
}

}  // namespace detail

Magnitude mag_factorial(unsigned long n, unsigned bits) {
  if (n < 2) return Magnitude();
  if (n <= detail::kExactFactorialLimit)
    return Magnitude::from_integer(factorial(n), bits);
  const Bracket b = detail::log2_factorial_stirling(n, bits);
  return Magnitude::from_log2(b.low, b.high, bits);
}

Magnitude mag_max(const Magnitude& a, const Magnitude& b) {
  return Magnitude::from_log2(std::max(a.log2_low(), b.log2_low()),
                              std::max(a.log2_high(), b.log2_high()), kExactBits);
}

Magnitude mag_min(const Magnitude& a, const Magnitude& b) {
  return Magnitude::from_log2(std::min(a.log2_low(), b.log2_low()),
                              std::min(a.log2_high(), b.log2_high()), kExactBits);
}

Bracket ln_bracket(const Magnitude& a, unsigned bits) {
  const Bracket l2 = ln2_bracket(bits + kGuardBits);
  const Rational& lo = a.log2_low();
  const Rational& hi = a.log2_high();
  const Rational low = lo >= 0 ? lo * l2.low : lo * l2.high;
  const Rational high = hi >= 0 ? hi * l2.high : hi * l2.low;
  return {round_down(low, bits), round_up(high, bits)};
}

Certified certify_less(const Magnitude& a, const Magnitude& b) {
  if (a.log2_high() < b.log2_low()) return Certified::yes;
  if (a.log2_low() > b.log2_high()) return Certified::no;
  return Certified::indeterminate;
}

Certified certify_less_equal(const Magnitude& a, const Magnitude& b) {
  if (a.log2_high() <= b.log2_low()) return Certified::yes;
  if (a.log2_low() > b.log2_high()) return Certified::no;
  return Certified::indeterminate;
}

const char* to_string(Certified c) {
  switch (c) {
    case Certified::yes:
      return "certified";
    case Certified::no:
      return "refuted";
    case Certified::indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

}  // namespace aobound
