#pragma once

#include <array>
#include <optional>
#include <vector>

#include "slk/rational.hpp"
#include "slk/weilrep.hpp"

namespace slk::lattice {

// Ambient quadratic space is (Q^2, Q(a,b) = ab), bilinear (X,Y) = X1 Y2 + X2 Y1.
using Vec2 = std::array<Rational, 2>;

Rational qform(const Vec2& x);                    // x1 x2
Rational bilinear(const Vec2& x, const Vec2& y);  // x1 y2 + x2 y1
Vec2 vsub(const Vec2& a, const Vec2& b);

// An even lattice of signature (1,1) given by a basis inside (Q^2, ab).
class Lattice11 {
 public:
  Lattice11(const Vec2& b1, const Vec2& b2);  // checks the Gram matrix is even integral

  // Z^2 itself: the hyperbolic plane, unimodular.
  static Lattice11 hyperbolic();

  // Basis (1, d), (-1, d): orthogonal vectors of norms d and -d, so the
  // lattice is Z(d) + Z(-d) sitting inside (Q^2, ab).
  static Lattice11 scaled_pair(long d);

  const Vec2& basis(int i) const { return basis_.at(static_cast<std::size_t>(i)); }
  std::array<std::array<Rational, 2>, 2> gram() const;
  Rational gram_det() const;

  Vec2 coords(const Vec2& x) const;       // solve x = c1 b1 + c2 b2
  Vec2 from_coords(const Vec2& c) const;
  bool contains(const Vec2& x) const;
  bool dual_contains(const Vec2& x) const;  // (x, b_i) integral for both i
  std::array<Vec2, 2> dual_basis() const;

 private:
  std::array<Vec2, 2> basis_;
};

// A rational positive line w spanned by y (primitive in L, both coordinates
// positive), with y-perp the primitive generator of the orthogonal line whose
// second coordinate is positive.  d_P = q(y), d_N = -q(y-perp).
struct SpecialPoint {
  Vec2 y;
  Vec2 yperp;
  Integer d_P;
  Integer d_N;

  bool d_P_is_square() const;
  Integer sqrt_d_P() const;  // valid when d_P_is_square()
};

// Scales the positive direction (dir1, dir2) to the primitive lattice vector.
SpecialPoint make_special_point(const Lattice11& L, const Rational& dir1, const Rational& dir2);

// (q(X_w), |q(X_{w-perp})|), both exact.
std::pair<Rational, Rational> project(const Vec2& x, const SpecialPoint& w);

// (sqrt|q(X_{w-perp})| - sqrt|q(X_w)|)^{1+2j}, evaluated through the identity
//   sqrt|q(X_{w-perp})| - sqrt|q(X_w)| = sign * min(|X1 y2|, |X2 y1|) / sqrt(d_P)
// with sign = -1 exactly when q(X) > 0.  Exact when d_P is a perfect square.
Rational min_weight_exact(const Vec2& x, const SpecialPoint& w, unsigned j);
double min_weight(const Vec2& x, const SpecialPoint& w, unsigned j);

// All X in L' with q(X) = m != 0, optionally restricted to the coset of
// coset_rep modulo L.  Finite because X1 X2 = m pins X to divisor pairs;
// writing X = (s1/D1, s2/D2) with D_i the coordinate denominators of L'
// forces s1 s2 = m D1 D2, so |s1| runs over divisors of |m| D1 D2.
std::vector<Vec2> enumerate_dual_vectors(const Lattice11& L, const Rational& m,
                                         const std::optional<Vec2>& coset_rep);

struct LiftCoefficient {
  std::optional<Vec2> coset_rep;  // representative in L'; nullopt = the lattice itself
  Rational m;                     // must be negative
  Rational value;
};

// sum over supported (coset, m) of value * sum_{X in coset, q(X)=m} min-weight.
// Exact; requires d_P to be a perfect square.
Rational lift_sum(const Lattice11& L, const std::vector<LiftCoefficient>& coeffs,
                  const SpecialPoint& w, unsigned j);

// Same sum with double-precision weights, for arbitrary special points.
double lift_sum_real(const Lattice11& L, const std::vector<LiftCoefficient>& coeffs,
                     const SpecialPoint& w, unsigned j);

// Coset data for K = P + N inside L at a special point.  K'/K is the group of
// Z(d_P) + Z(-d_N); the element (r1, r2) is the class of
// r1*y/(2 d_P) + r2*yperp/(2 d_N).  Classes of L'/L are labeled through the
// caller-supplied group when L is one of the supported shapes:
//   - unimodular L (trivial group), or
//   - L with an orthogonal basis of norms +d, -d (group of Z(d) + Z(-d),
//     labeled by doubled basis coordinates).
weilrep::SublatticeIndex make_sublattice_index(const Lattice11& L, const SpecialPoint& w);

// Majorant theta series of L at w as a VectorSeries over the given group:
// component of X is its class in L'/L, exponent q(X_w) + |q(X_{w-perp})|.
// Supported for the same L shapes as make_sublattice_index.
weilrep::VectorSeries majorant_theta(const Lattice11& L, const SpecialPoint& w,
                                     const Rational& trunc);

}  // namespace slk::lattice
