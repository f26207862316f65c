#include "slk/forms.hpp"

#include <stdexcept>

#include "slk/arith.hpp"
#include "slk/errors.hpp"

namespace slk::forms {

FracSeries jacobi_theta(const Rational& trunc) {
  if (trunc <= 0) throw std::invalid_argument("jacobi_theta requires positive truncation");
  FracSeries::TermMap terms;
  terms[0] = 1;
  for (long n = 1; Rational(n) * n < trunc; ++n) terms[n * n] = 2;
  return FracSeries::from_terms(1, std::move(terms), trunc);
}

FracSeries hurwitz_gen(const Rational& trunc) {
  if (trunc <= 0) throw std::invalid_argument("hurwitz_gen requires positive truncation");
  long max_n = to_int64(rat_ceil(trunc)) - 1;
  arith::HurwitzTable table = arith::HurwitzTable::build(max_n);
  FracSeries::TermMap terms;
  for (long n = 0; n <= max_n && Rational(n) < trunc; ++n) {
    const Rational& h = table.value(n);
    if (h != 0) terms[n] = h;
  }
  return FracSeries::from_terms(1, std::move(terms), trunc);
}

std::pair<FracSeries, FracSeries> curlyG_components(const Rational& trunc) {
  if (trunc <= 0) throw std::invalid_argument("curlyG_components requires positive truncation");
  long max_n = to_int64(rat_ceil(4 * trunc)) - 1;
  arith::HurwitzTable table = arith::HurwitzTable::build(max_n);
  FracSeries::TermMap even4, odd4;
  for (long n = 0; n <= max_n && frac(n, 4) < trunc; ++n) {
    const Rational& h = table.value(n);
    if (h == 0) continue;
    if (n % 4 == 0) even4[n] = h;
    if (n % 4 == 3) odd4[n] = h;
  }
  return {FracSeries::from_terms(4, std::move(even4), trunc),
          FracSeries::from_terms(4, std::move(odd4), trunc)};
}

FracSeries dedekind_eta(const Rational& trunc, EtaVariant variant) {
  if (trunc <= 0) throw std::invalid_argument("dedekind_eta requires positive truncation");
  if (variant == EtaVariant::Sum) {
    FracSeries::TermMap terms;
    for (long n = 1; frac(n * n, 24) < trunc; ++n) {
      int chi = arith::kronecker12(n);
      if (chi != 0) terms[n * n] = chi;
    }
    return FracSeries::from_terms(24, std::move(terms), trunc);
  }
  // q^{1/24} prod (1 - q^n); factors beyond the truncation cannot contribute.
  FracSeries product = FracSeries::monomial(1, Rational(1, 24), trunc);
  for (long n = 1; Rational(n) + Rational(1, 24) < trunc; ++n) {
    FracSeries factor =
        FracSeries::constant(1, trunc + 1).sub(FracSeries::monomial(1, Rational(n), trunc + 1));
    product = product.mul(factor);
  }
  return product.truncated(trunc).canonical();
}

FracSeries spt_gen_g(const Rational& trunc) {
  if (trunc <= 0) throw std::invalid_argument("spt_gen_g requires positive truncation");
  FracSeries::TermMap terms;
  for (long n = 0; frac(24 * n - 1, 24) < trunc; ++n) {
    Rational a = frac(24 * n - 1, 12) * Rational(arith::partition_p(n));
    if (n >= 1) a += Rational(arith::spt(n));
    if (a != 0) terms[24 * n - 1] = a;
  }
  return FracSeries::from_terms(24, std::move(terms), trunc);
}

FracSeries G_series(unsigned k, const Rational& trunc) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("G_series requires even k >= 2");
  if (trunc <= 0) throw std::invalid_argument("G_series requires positive truncation");
  FracSeries::TermMap terms;
  for (long s = 1; frac(s * (s + 1), 6) < trunc; ++s) {
    for (long r = s + 1; frac(r * s, 6) < trunc; ++r) {
      int chi = arith::kronecker12(r * r - s * s);
      if (chi == 0) continue;
      if ((r * s) % 6 != 0)
        throw NonIntegralExponent("G_series produced exponent " + frac(r * s, 6).get_str());
      std::int64_t e = r * s / 6;
      Rational term = Rational(-chi) * Rational(int_pow(Integer(s), k - 1));
      auto [it, inserted] = terms.emplace(e, term);
      if (!inserted) {
        it->second += term;
        if (it->second == 0) terms.erase(it);
      }
    }
  }
  return FracSeries::from_terms(1, std::move(terms), trunc);
}

FracSeries eisenstein(unsigned k, const Rational& trunc) {
  if (k != 4 && k != 6) throw std::invalid_argument("eisenstein supports k = 4 and 6 only");
  if (trunc <= 0) throw std::invalid_argument("eisenstein requires positive truncation");
  Rational scale = (k == 4) ? Rational(240) : Rational(-504);
  unsigned power = k - 1;
  FracSeries::TermMap terms;
  terms[0] = 1;
  for (long n = 1; Rational(n) < trunc; ++n) terms[n] = scale * Rational(arith::sigma(n, power));
  return FracSeries::from_terms(1, std::move(terms), trunc);
}

FracSeries F_weight2(const Rational& trunc) {
  if (trunc <= 0) throw std::invalid_argument("F_weight2 requires positive truncation");
  FracSeries::TermMap terms;
  for (long n = 1; Rational(n) < trunc; n += 2) terms[n] = Rational(arith::sigma(n, 1));
  return FracSeries::from_terms(1, std::move(terms), trunc);
}

}  // namespace slk::forms
