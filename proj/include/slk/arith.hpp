#pragma once

#include <vector>

#include "slk/rational.hpp"

namespace slk::arith {

// Divisor power sum sum_{d|n} d^k.
Integer sigma(long n, unsigned k);

// lambda_ell(n) = (1/2) sum_{d|n} min(d, n/d)^ell.
Rational lambda_ell(long n, unsigned ell);

// Kronecker character mod 12: +1 at +-1, -1 at +-5, 0 when gcd(n,12) > 1.
int kronecker12(long n);

// Hurwitz class number H(n).  H(0) = -1/12; zero for n = 1, 2 mod 4;
// otherwise a weighted count of reduced positive-definite integral binary
// quadratic forms of discriminant -n (weights 1/3 and 1/2 for the forms
// proportional to (1,1,1) and (1,0,1)).
Rational hurwitz(long n);

// Table of H(0..max_n), persisted through the table cache.
class HurwitzTable {
 public:
  static HurwitzTable build(long max_n);          // cache-backed
  static HurwitzTable build_uncached(long max_n);

  long max_n() const { return max_n_; }
  const Rational& value(long n) const;
  const std::vector<Rational>& values() const { return values_; }

 private:
  HurwitzTable(long max_n, std::vector<Rational> values)
      : max_n_(max_n), values_(std::move(values)) {}
  long max_n_;
  std::vector<Rational> values_;
};

// Partition numbers by the pentagonal-number recurrence.
Integer partition_p(long n);

// Smallest-parts function through its generating series
// sum_{k>=1} q^k/(1-q^k)^2 prod_{m>k} 1/(1-q^m).
Integer spt(long n);

// Independent implementations used as test oracles.
namespace oracle {

// Reduced-form count by a plain scan over the (a,b,c) box.
Rational hurwitz_enumeration(long n);

// Partition numbers by dynamic programming over allowed parts.
Integer partition_dp(long n);

// Smallest-parts count by walking every partition of n.
Integer spt_enumeration(long n);

// Generic Kronecker symbol (a|n) for cross-checking kronecker12.
int kronecker_symbol(long a, long n);

}  // namespace oracle

}  // namespace slk::arith
