#pragma once

#include <utility>

#include "slk/fracseries.hpp"

namespace slk::forms {

// theta(tau) = sum_{n in Z} q^{n^2}.
FracSeries jacobi_theta(const Rational& trunc);

// Hurwitz class number generating series sum_{n>=0} H(n) q^n.
FracSeries hurwitz_gen(const Rational& trunc);

// Class number series split by residue, with exponents in (1/4)Z:
//   first:  sum_{n = 0 mod 4} H(n) q^{n/4}
//   second: sum_{n = 3 mod 4} H(n) q^{n/4}
// These are the two components of the holomorphic part of the weight-3/2
// preimage of theta, with its transcendental prefactor dropped; the matching
// rational constants live in the verifier.
std::pair<FracSeries, FracSeries> curlyG_components(const Rational& trunc);

enum class EtaVariant { Sum, Product };

// Dedekind eta: either sum_{n>=1} chi12(n) q^{n^2/24} or
// q^{1/24} prod_{n>=1} (1 - q^n).
FracSeries dedekind_eta(const Rational& trunc, EtaVariant variant);

// g(tau) = q^{-1/24} sum_{n>=0} (spt(n) + (24n-1)p(n)/12) q^n, with spt(0)
// taken to be 0 so the leading term is -1/12 q^{-1/24}.
FracSeries spt_gen_g(const Rational& trunc);

// G_k(tau) = -sum_{r>s>0} chi12(r^2-s^2) s^{k-1} q^{rs/6}.  Every surviving
// exponent is an integer; a fractional one raises NonIntegralExponent.
FracSeries G_series(unsigned k, const Rational& trunc);

// Normalized Eisenstein series E_4, E_6 on SL2(Z).
FracSeries eisenstein(unsigned k, const Rational& trunc);

// F(tau) = sum_{n odd} sigma_1(n) q^n, weight 2 on Gamma0(4).
FracSeries F_weight2(const Rational& trunc);

}  // namespace slk::forms
