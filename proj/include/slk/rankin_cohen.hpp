#pragma once

#include "slk/fracseries.hpp"
#include "slk/weilrep.hpp"

namespace slk::rc {

// Half-integral weight kappa = twice/2.
struct HalfIntWeight {
  int twice;
  static HalfIntWeight halves(int t) { return HalfIntWeight{t}; }
  Rational value() const { return frac(twice, 2); }
};

// Gamma(kappa+n)/Gamma(kappa+n-s) as the falling factorial
// (kappa+n-1)(kappa+n-2)...(kappa+n-s), an exact rational.  Rejects the pole
// configuration where Gamma(kappa+n) itself diverges.
Rational gamma_ratio(HalfIntWeight kappa, unsigned n, unsigned s);

// Coefficient of D^r f * D^s g (s = n-r) in the n-th bracket:
// (-1)^r Gamma(kf+n) Gamma(kg+n) / (s! Gamma(kf+n-s) r! Gamma(kg+n-r)).
Rational bracket_coefficient(HalfIntWeight kf, HalfIntWeight kg, unsigned n, unsigned r);

// n-th Rankin-Cohen bracket in normalized form: derivatives realized as
// q d/dq, so the (2 pi i)^{-n} prefactor is absorbed and all coefficients
// stay rational.  Output weight is kf + kg + 2n.
FracSeries rc_bracket(const FracSeries& f, HalfIntWeight kf, const FracSeries& g, HalfIntWeight kg,
                      unsigned n);

// Vector-valued bracket; the products are tensor products on the sum group.
weilrep::VectorSeries rc_bracket(const weilrep::VectorSeries& f, HalfIntWeight kf,
                                 const weilrep::VectorSeries& g, HalfIntWeight kg, unsigned n);

inline int output_twice_weight(HalfIntWeight kf, HalfIntWeight kg, unsigned n) {
  return kf.twice + kg.twice + 4 * static_cast<int>(n);
}

}  // namespace slk::rc
