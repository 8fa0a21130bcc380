#pragma once

#include "aobound/bigint.hpp"

#include <utility>

namespace aobound {

/// Fractional bits kept on Magnitude endpoints unless a caller asks for more.
inline constexpr unsigned kDefaultPrecisionBits = 64;
/// Passed as `bits` to skip rounding entirely.
inline constexpr unsigned kExactBits = ~0u;

/// Dyadic rounding of q to denominator 2^bits; a no-op when q's denominator
/// already fits.
Rational round_down(const Rational& q, unsigned bits);
Rational round_up(const Rational& q, unsigned bits);

/// A closed rational interval [low, high] known to contain some real number.
struct Bracket {
  Rational low;
  Rational high;
};

/// Enclosure of log2(m) for an integer m > 0, endpoints on the 2^-bits grid.
Bracket log2_bracket(const Integer& m, unsigned bits = kDefaultPrecisionBits);

/// Enclosure of log2(q) for a rational q > 0.
Bracket log2_bracket(const Rational& q, unsigned bits = kDefaultPrecisionBits);

/// Enclosure of ln 2.
Bracket ln2_bracket(unsigned bits = kDefaultPrecisionBits);

/// Enclosure of pi (fixed 38-digit decimal bounds).
Bracket pi_bracket();

/// A positive real known through outward-rounded rational bounds on log2 of
/// its value.  Endpoints always satisfy log2_low <= log2_high.
class Magnitude {
 public:
  /// The value 1.
  Magnitude() = default;

  static Magnitude from_log2(const Rational& low, const Rational& high,
                             unsigned bits = kDefaultPrecisionBits);
  static Magnitude power_of_two(const Rational& exponent,
                                unsigned bits = kDefaultPrecisionBits);
  static Magnitude from_integer(const Integer& m,
                                unsigned bits = kDefaultPrecisionBits);
  static Magnitude from_rational(const Rational& q,
                                 unsigned bits = kDefaultPrecisionBits);
  /// Any value in [low, high], 0 < low <= high.
  static Magnitude from_value_bounds(const Rational& low, const Rational& high,
                                     unsigned bits = kDefaultPrecisionBits);

  const Rational& log2_low() const noexcept { return low_; }
  const Rational& log2_high() const noexcept { return high_; }
  Rational width() const { return high_ - low_; }
  bool is_point() const { return low_ == high_; }
  bool contains_log2(const Rational& v) const { return low_ <= v && v <= high_; }

  friend bool operator==(const Magnitude& a, const Magnitude& b) {
    return a.low_ == b.low_ && a.high_ == b.high_;
  }

 private:
  Magnitude(Rational low, Rational high)
      : low_(std::move(low)), high_(std::move(high)) {}
  Rational low_{0};
  Rational high_{0};
};

Magnitude mag_mul(const Magnitude& a, const Magnitude& b,
                  unsigned bits = kDefaultPrecisionBits);
Magnitude mag_div(const Magnitude& a, const Magnitude& b,
                  unsigned bits = kDefaultPrecisionBits);
Magnitude mag_inv(const Magnitude& a);
/// a^e for any rational e; a negative exponent swaps the rounding sides.
Magnitude mag_pow(const Magnitude& a, const Rational& e,
                  unsigned bits = kDefaultPrecisionBits);
/// n! (exact product for moderate n, Robbins-Stirling enclosure beyond).
Magnitude mag_factorial(unsigned long n, unsigned bits = kDefaultPrecisionBits);
Magnitude mag_max(const Magnitude& a, const Magnitude& b);
Magnitude mag_min(const Magnitude& a, const Magnitude& b);

/// Enclosure of the natural log of the value.
Bracket ln_bracket(const Magnitude& a, unsigned bits = kDefaultPrecisionBits);

enum class Certified { yes, no, indeterminate };

/// a < b, certified pessimistically; touching intervals are indeterminate.
Certified certify_less(const Magnitude& a, const Magnitude& b);
/// a <= b, certified pessimistically.
Certified certify_less_equal(const Magnitude& a, const Magnitude& b);

const char* to_string(Certified c);

namespace detail {
/// Robbins-Stirling enclosure of log2(n!), exposed for testing.
Bracket log2_factorial_stirling(unsigned long n, unsigned bits);
inline constexpr unsigned long kExactFactorialLimit = 200000;
}  // namespace detail

}  // namespace aobound
