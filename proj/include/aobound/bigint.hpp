#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aobound {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an argument violates a documented precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A certified comparison could not be decided at the current precision.
class IndeterminateError : public std::runtime_error {
 public:
  IndeterminateError(std::string constant, const std::string& what)
      : std::runtime_error(what), constant_(std::move(constant)) {}
  const std::string& constant() const noexcept { return constant_; }

 private:
  std::string constant_;
};

/// The fixpoint search passed the configured log2 ceiling.
class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Integer pow2(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Number of bits in |m|; 0 for m = 0.
inline std::size_t bit_length(const Integer& m) {
  return m == 0 ? 0 : mpz_sizeinbase(m.get_mpz_t(), 2);
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer floor_of(const Rational& q) {
  return floor_div(q.get_num(), q.get_den());
}

inline Integer ceil_of(const Rational& q) {
  return ceil_div(q.get_num(), q.get_den());
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline std::string to_string(const Integer& m) { return m.get_str(); }

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses a decimal integer; throws DomainError on malformed input.
Integer parse_integer(std::string_view text);

/// Parses "p" or "p/q"; throws DomainError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

}  // namespace aobound
