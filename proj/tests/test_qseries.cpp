#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "slk/errors.hpp"
#include "slk/fracseries.hpp"

using slk::frac;
using slk::FracSeries;
using slk::Rational;

namespace {

FracSeries random_series(std::mt19937& rng, std::int64_t den, const Rational& trunc) {
  std::uniform_int_distribution<int> terms(0, 6);
  std::uniform_int_distribution<long> num(-3, 3), exp_num(0, 12), exp_den(1, 3);
  FracSeries out = FracSeries::zero(trunc);
  int n = terms(rng);
  for (int i = 0; i < n; ++i) {
    Rational c(num(rng));
    if (c == 0) continue;
    Rational e = frac(exp_num(rng), den) * exp_den(rng);
    if (e < trunc) out = out.add(FracSeries::monomial(c, e, trunc));
  }
  return out;
}

}  // namespace

TEST_CASE("addition basics") {
  Rational T(10);
  FracSeries one_plus_q = FracSeries::constant(1, T).add(FracSeries::monomial(1, 1, T));
  FracSeries zero = FracSeries::zero(T);
  CHECK(one_plus_q.add(zero) == one_plus_q);

  // lcm rescale: q^{1/2} + q^{1/3} lives over denominator 6
  FracSeries a = FracSeries::monomial(1, frac(1, 2), T);
  FracSeries b = FracSeries::monomial(1, frac(1, 3), T);
  FracSeries sum = a.add(b);
  CHECK(sum.coefficient(frac(1, 2)) == 1);
  CHECK(sum.coefficient(frac(1, 3)) == 1);
  CHECK(sum.coefficient(frac(1, 6)) == 0);

  // truncation is the minimum
  FracSeries c = FracSeries::constant(1, Rational(3)).add(FracSeries::monomial(2, 1, Rational(3)));
  FracSeries d = FracSeries::constant(-1, Rational(2)).add(FracSeries::monomial(1, 2, Rational(2)));
  FracSeries e = c.add(d);
  CHECK(e.trunc() == 2);
  CHECK(e.coefficient(Rational(0)) == 0);
  CHECK(e.coefficient(Rational(1)) == 2);
  CHECK_THROWS_AS(e.coefficient(Rational(2)), slk::InsufficientPrecision);
}

TEST_CASE("multiplication basics") {
  Rational T(10);
  FracSeries one_plus_q = FracSeries::constant(1, T).add(FracSeries::monomial(1, 1, T));
  FracSeries one_minus_q = FracSeries::constant(1, T).add(FracSeries::monomial(-1, 1, T));
  FracSeries prod = one_plus_q.mul(one_minus_q);
  CHECK(prod.coefficient(Rational(0)) == 1);
  CHECK(prod.coefficient(Rational(1)) == 0);
  CHECK(prod.coefficient(Rational(2)) == -1);

  // principal parts cancel: q^{-1/24} * q^{1/24} = 1
  FracSeries neg = FracSeries::monomial(1, frac(-1, 24), T);
  FracSeries pos = FracSeries::monomial(1, frac(1, 24), T);
  FracSeries unit = neg.mul(pos);
  CHECK(unit.coefficient(Rational(0)) == 1);
  CHECK(unit.term_count() == 1);

  // products of series with principal parts in both factors
  FracSeries a = FracSeries::monomial(1, -1, T).add(FracSeries::constant(1, T));
  FracSeries b = FracSeries::monomial(1, -1, T).add(FracSeries::constant(-1, T));
  FracSeries p = a.mul(b);  // q^{-2} - 1
  CHECK(p.coefficient(Rational(-2)) == 1);
  CHECK(p.coefficient(Rational(-1)) == 0);
  CHECK(p.coefficient(Rational(0)) == -1);
}

TEST_CASE("truncation propagates pessimistically through mul") {
  // (q^2 + O(q^5)) * (q^3 + O(q^4)) is exact only below min(5+3, 4+2) = 6
  FracSeries a = FracSeries::monomial(1, 2, Rational(5));
  FracSeries b = FracSeries::monomial(1, 3, Rational(4));
  CHECK(a.mul(b).trunc() == 6);
}

TEST_CASE("theta derivative") {
  Rational T(10);
  FracSeries s = FracSeries::monomial(1, 1, T).add(FracSeries::monomial(1, 2, T));
  CHECK(s.theta_derivative(0) == s);
  FracSeries d = s.theta_derivative(1);
  CHECK(d.coefficient(Rational(1)) == 1);
  CHECK(d.coefficient(Rational(2)) == 2);
  FracSeries quarter = FracSeries::monomial(1, frac(1, 4), T).theta_derivative(2);
  CHECK(quarter.coefficient(frac(1, 4)) == frac(1, 16));
}

TEST_CASE("rescale variable") {
  Rational T(10);
  FracSeries s = FracSeries::monomial(1, frac(1, 4), T).add(FracSeries::monomial(1, 1, T));
  CHECK(s.rescale_exponents(1) == s.canonical());
  FracSeries r = s.rescale_exponents(4);
  CHECK(r.coefficient(Rational(1)) == 1);
  CHECK(r.coefficient(Rational(4)) == 1);
  CHECK(r.trunc() == 40);
  CHECK_THROWS_AS(s.rescale_exponents(Rational(0)), std::invalid_argument);
}

TEST_CASE("parity part") {
  Rational T(10);
  FracSeries s = FracSeries::constant(1, T)
                     .add(FracSeries::monomial(1, 1, T))
                     .add(FracSeries::monomial(1, 2, T));
  FracSeries odd = s.parity_part(1, 2);
  CHECK(odd.term_count() == 1);
  CHECK(odd.coefficient(Rational(1)) == 1);
  FracSeries even = s.parity_part(0, 2);
  CHECK(even.coefficient(Rational(0)) == 1);
  CHECK(even.coefficient(Rational(2)) == 1);
  CHECK(even.term_count() == 2);
  FracSeries fractional = FracSeries::monomial(1, frac(1, 2), T);
  CHECK_THROWS_AS(fractional.parity_part(0, 2), slk::NonIntegralExponent);
}

TEST_CASE("coefficient access rejects exponents beyond the truncation") {
  FracSeries s = FracSeries::constant(1, Rational(2)).add(FracSeries::monomial(2, 1, Rational(2)));
  CHECK(s.coefficient(Rational(1)) == 2);
  CHECK(s.coefficient(frac(1, 2)) == 0);
  CHECK_THROWS_AS(s.coefficient(Rational(3)), slk::InsufficientPrecision);
}

TEST_CASE("equality is invariant under denominator rescaling") {
  FracSeries a = FracSeries::from_terms(2, {{2, Rational(5)}}, Rational(8));
  FracSeries b = FracSeries::from_terms(6, {{6, Rational(5)}}, Rational(8));
  CHECK(a == b);
  CHECK(a.canonical().exponent_den() == 1);
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Rational T(8);
    FracSeries a = random_series(rng, 4, T);
    FracSeries b = random_series(rng, 4, T);
    FracSeries c = random_series(rng, 4, T);
    CHECK(a.add(b) == b.add(a));
    CHECK(a.add(b).add(c) == a.add(b.add(c)));
    CHECK(a.mul(b).agrees_with(b.mul(a)));
    CHECK(a.mul(b).mul(c).agrees_with(a.mul(b.mul(c))));
    CHECK(a.mul(b.add(c)).agrees_with(a.mul(b).add(a.mul(c))));
  }
}

TEST_CASE("theta derivative is a derivation") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Rational T(8);
    FracSeries f = random_series(rng, 4, T);
    FracSeries g = random_series(rng, 4, T);
    FracSeries lhs = f.mul(g).theta_derivative(1);
    FracSeries rhs = f.theta_derivative(1).mul(g).add(f.mul(g.theta_derivative(1)));
    CHECK(lhs.agrees_with(rhs));
  }
}

TEST_CASE("rescale composition") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    FracSeries a = random_series(rng, 4, Rational(8));
    Rational c1 = frac(3, 2), c2 = frac(1, 3);
    CHECK(a.rescale_exponents(c1 * c2) == a.rescale_exponents(c2).rescale_exponents(c1));
  }
}
