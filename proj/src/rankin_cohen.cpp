#include "slk/rankin_cohen.hpp"

#include <stdexcept>

namespace slk::rc {

Rational gamma_ratio(HalfIntWeight kappa, unsigned n, unsigned s) {
  Rational top = kappa.value() + static_cast<long>(n);
  if (top <= 0 && is_integer(top))
    throw std::domain_error("gamma_ratio: Gamma(" + top.get_str() + ") is a pole");
  Rational product(1);
  Rational factor = top - 1;
  for (unsigned i = 0; i < s; ++i, factor -= 1) product *= factor;
  return product;
}

Rational bracket_coefficient(HalfIntWeight kf, HalfIntWeight kg, unsigned n, unsigned r) {
  if (r > n) throw std::invalid_argument("bracket_coefficient requires r <= n");
  unsigned s = n - r;
  Rational c = gamma_ratio(kf, n, s) / Rational(factorial(s));
  c *= gamma_ratio(kg, n, r) / Rational(factorial(r));
  if (r % 2 == 1) c = -c;
  return c;
}

FracSeries rc_bracket(const FracSeries& f, HalfIntWeight kf, const FracSeries& g, HalfIntWeight kg,
                      unsigned n) {
  FracSeries total = FracSeries::zero(std::min(f.trunc() + g.lowest_exponent(),
                                               g.trunc() + f.lowest_exponent()));
  for (unsigned r = 0; r <= n; ++r) {
    Rational c = bracket_coefficient(kf, kg, n, r);
    if (c == 0) continue;
    total = total.add(c * f.theta_derivative(r).mul(g.theta_derivative(n - r)));
  }
  return total;
}

weilrep::VectorSeries rc_bracket(const weilrep::VectorSeries& f, HalfIntWeight kf,
                                 const weilrep::VectorSeries& g, HalfIntWeight kg, unsigned n) {
  weilrep::VectorSeries total = weilrep::tensor(f, g).scale(Rational(0));
  for (unsigned r = 0; r <= n; ++r) {
    Rational c = bracket_coefficient(kf, kg, n, r);
    if (c == 0) continue;
    total = total.add(weilrep::tensor(f.theta_derivative(r), g.theta_derivative(n - r)).scale(c));
  }
  return total;
}

}  // namespace slk::rc
