#include "slk/rational.hpp"

#include <limits>
#include <stdexcept>

namespace slk {

Integer int_pow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Rational rat_pow(const Rational& base, unsigned long e) {
  Rational out;
  mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
  return out;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer rat_floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer rat_ceil(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

std::int64_t to_int64(const Integer& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + x.get_str());
  return static_cast<std::int64_t>(x.get_si());
}

std::int64_t to_int64(const Rational& x) {
  if (!is_integer(x)) throw std::domain_error("rational is not an integer: " + x.get_str());
  return to_int64(Integer(x.get_num()));
}

double to_double(const Rational& x) { return mpq_get_d(x.get_mpq_t()); }

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer odd_double_factorial(unsigned long n) {
  Integer out = 1;
  for (unsigned long i = 1; i < 2 * n; i += 2) out *= i;
  return out;
}

Rational mod1(const Rational& x) {
  Rational r = x - Rational(rat_floor(x));
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }
std::string to_string(const Integer& x) { return x.get_str(); }

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("cannot parse rational: " + s);
  r.canonicalize();
  return r;
}

}  // namespace slk
