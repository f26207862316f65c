#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "slk/rational.hpp"

namespace slk {

// Truncated q-expansion with exponents in (1/D)*Z and exact rational
// coefficients.  The series is exact for every exponent strictly below
// trunc(); terms at or beyond trunc() are unknown, not zero.  Finitely many
// terms may have negative exponent (a principal part).
//
// Values are immutable in spirit: every operation returns a fresh series.
class FracSeries {
 public:
  // exponent numerator over exponent_den() -> nonzero coefficient
  using TermMap = std::map<std::int64_t, Rational>;

  FracSeries() : den_(1), trunc_(0) {}

  static FracSeries zero(const Rational& trunc);
  static FracSeries constant(const Rational& c, const Rational& trunc);
  static FracSeries monomial(const Rational& c, const Rational& exponent, const Rational& trunc);
  static FracSeries from_terms(std::int64_t den, TermMap terms, const Rational& trunc);

  std::int64_t exponent_den() const { return den_; }
  const Rational& trunc() const { return trunc_; }
  const TermMap& terms() const { return coeffs_; }
  std::size_t term_count() const { return coeffs_.size(); }
  bool known_zero() const { return coeffs_.empty(); }

  Rational exponent_value(std::int64_t numerator) const { return frac(numerator, den_); }

  // Least stored exponent; equals trunc() for a series with no visible terms.
  Rational lowest_exponent() const;

  // Stored coefficient or zero; rejects exponents at or beyond trunc().
  Rational coefficient(const Rational& exponent) const;

  bool has_integral_exponents() const;

  FracSeries operator-() const;
  FracSeries add(const FracSeries& other) const;
  FracSeries sub(const FracSeries& other) const;
  FracSeries mul(const FracSeries& other) const;
  FracSeries scale(const Rational& c) const;

  // Normalized derivative (q d/dq)^r: term c q^m becomes c m^r q^m.
  FracSeries theta_derivative(unsigned r) const;

  // Exponent substitution q^m -> q^{c m} for positive rational c.
  FracSeries rescale_exponents(const Rational& c) const;

  // Keeps terms with exponent congruent to residue mod modulus; every
  // exponent of the series must be integral.
  FracSeries parity_part(std::int64_t residue, std::int64_t modulus) const;

  // Lowers the truncation bound (new_trunc must not exceed trunc()).
  FracSeries truncated(const Rational& new_trunc) const;

  // Minimal exponent denominator representative.
  FracSeries canonical() const;

  // Equality of canonical forms, truncation included.
  bool operator==(const FracSeries& other) const;
  bool operator!=(const FracSeries& other) const { return !(*this == other); }

  // Coefficientwise agreement through min(trunc(), other.trunc()).
  bool agrees_with(const FracSeries& other) const;

  std::string str() const;

 private:
  FracSeries(std::int64_t den, TermMap coeffs, Rational trunc);

  // Equivalent series whose exponent denominator is new_den (a multiple of den_).
  FracSeries with_den(std::int64_t new_den) const;
  void drop_unknown_terms();  // erase stored terms at or beyond trunc_

  std::int64_t den_;
  TermMap coeffs_;
  Rational trunc_;
};

FracSeries operator+(const FracSeries& a, const FracSeries& b);
FracSeries operator-(const FracSeries& a, const FracSeries& b);
FracSeries operator*(const FracSeries& a, const FracSeries& b);
FracSeries operator*(const Rational& c, const FracSeries& a);

}  // namespace slk
