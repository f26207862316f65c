#pragma once

#include <array>
#include <optional>
#include <vector>

#include "slk/lattice.hpp"

namespace slk::lift {

// Gauss hypergeometric series sum_k (a)_k (b)_k / ((c)_k k!) z^k for |z| < 1.
// Stops when the term drops below 1e-16 relative; throws NoConvergence past
// 10^6 terms and std::domain_error outside the disc.
double gauss_2f1(double a, double b, double c, double z);

// 2F1(1/2+j, 1+j; 2+2j; z) = (1/2 + (1/2)(1-z)^{1/2})^{-1-2j} for z < 1.
double closed_form_n1(unsigned j, double z);

struct Support {
  std::optional<lattice::Vec2> coset_rep;
  Rational m;      // negative
  double c_plus;
};

struct LiftInput {
  lattice::Lattice11 L = lattice::Lattice11::hyperbolic();
  std::vector<Support> support;
  unsigned j = 1;
  std::array<double, 2> z{1.0, 1.0};  // positive vector spanning the line
};

// Series evaluation of the n = 1 higher Siegel theta lift:
//   (4 pi)^{1/2+j} Gamma(1+j) Gamma(1/2+j) / Gamma(2+2j)
//     * sum_X c+(X) |q(X)|^{1+2j} (-q(X_{z-perp}))^{-1/2-j}
//       * 2F1(1/2+j, 1+j; 2+2j; q(X)/q(X_{z-perp})).
// The power of q(X) is taken on |q(X)| with an overall positive sign; this is
// the branch that reproduces the special-point evaluation below.  Throws
// DegeneratePoint when some X in the support is orthogonal to z.
double series_lift(const LiftInput& input);

// Special-point evaluation:
//   4^{1+2j} pi^{1/2+j} Gamma(1+j) Gamma(1/2+j) / Gamma(2+2j)
//     * sum_X c+(X) (sqrt|q(X_{w-perp})| - sqrt|q(X_w)|)^{1+2j},
// the lattice sum running through lattice::lift_sum (exact when d_P is a
// perfect square, floating otherwise).
double special_point_lift(const lattice::Lattice11& L, const std::vector<Support>& support,
                       const lattice::SpecialPoint& w, unsigned j);

}  // namespace slk::lift
