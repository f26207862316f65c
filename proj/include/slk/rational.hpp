#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace slk {

// All exact arithmetic in the toolkit runs on GMP integers and rationals.
// mpq_class keeps values canonical (positive denominator, coprime parts).
using Integer = mpz_class;
using Rational = mpq_class;

Integer int_pow(const Integer& base, unsigned long e);
Rational rat_pow(const Rational& base, unsigned long e);

// mpq_class(num, den) does not canonicalize; these do.
inline Rational frac(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}
inline Rational frac(long num, long den) { return frac(Integer(num), Integer(den)); }

bool is_integer(const Rational& x);
Integer rat_floor(const Rational& x);
Integer rat_ceil(const Rational& x);

// Checked narrowing; throws std::overflow_error when the value does not fit.
std::int64_t to_int64(const Integer& x);
std::int64_t to_int64(const Rational& x);

double to_double(const Rational& x);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);
Integer odd_double_factorial(unsigned long n);  // (2n-1)!! with (-1)!! = 1

// Representative of x mod 1 in [0, 1).
Rational mod1(const Rational& x);

std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

// Accepts "3", "-3", "3/4", "-3/4".
Rational parse_rational(const std::string& s);

}  // namespace slk
