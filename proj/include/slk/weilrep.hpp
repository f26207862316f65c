#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "slk/fracseries.hpp"

namespace slk::weilrep {

// One rank-1 factor Z(sign*d): the lattice (Z, sign*d*x^2), whose
// discriminant group is Z/2dZ with q(x) = sign*x^2/(4d) mod 1.
struct Factor {
  long d;
  int sign;  // +1 or -1
};

// Finite quadratic module of a direct sum of rank-1 factors.  Elements are
// residue tuples, one residue mod 2*d_i per factor.
class DiscriminantGroup {
 public:
  using Element = std::vector<long>;

  explicit DiscriminantGroup(std::vector<Factor> factors);
  static DiscriminantGroup trivial() { return DiscriminantGroup({}); }

  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::size_t order() const { return order_; }
  std::pair<int, int> signature() const;  // (r, s) = (#positive, #negative)

  std::size_t index_of(const Element& e) const;
  Element element(std::size_t index) const;
  Element reduce(const Element& e) const;  // residues into [0, 2d_i)
  Element add(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  Element zero() const { return Element(factors_.size(), 0); }

  Rational q_value(const Element& e) const;                        // in [0,1)
  Rational bilinear(const Element& a, const Element& b) const;     // in [0,1)

  bool operator==(const DiscriminantGroup& other) const;

 private:
  std::vector<Factor> factors_;
  std::size_t order_;
};

// A C[L'/L]-valued q-expansion: one FracSeries per group element, all sharing
// an exponent denominator and truncation.
class VectorSeries {
 public:
  VectorSeries(DiscriminantGroup group, const Rational& trunc);
  VectorSeries(DiscriminantGroup group, std::vector<FracSeries> components);

  const DiscriminantGroup& group() const { return group_; }
  const Rational& trunc() const { return trunc_; }
  const FracSeries& component(std::size_t index) const { return comps_.at(index); }
  const FracSeries& component(const DiscriminantGroup::Element& e) const {
    return comps_.at(group_.index_of(e));
  }
  void set_component(const DiscriminantGroup::Element& e, const FracSeries& s);

  VectorSeries add(const VectorSeries& other) const;
  VectorSeries scale(const Rational& c) const;
  VectorSeries rescale_exponents(const Rational& c) const;
  VectorSeries theta_derivative(unsigned r) const;

  // Reinterprets the components on another group of the same order, keeping
  // linear indices (the mixed-radix shapes must match).
  VectorSeries with_group(const DiscriminantGroup& g) const;

  bool operator==(const VectorSeries& other) const;
  bool agrees_with(const VectorSeries& other) const;

 private:
  void normalize();

  DiscriminantGroup group_;
  std::vector<FracSeries> comps_;
  Rational trunc_;
};

// Weil representation generator data.  rho_T is diagonal with exact phases
// e(q(mu)); rho_S is a dense complex matrix, used only in property tests.
std::vector<Rational> rho_T_phases(const DiscriminantGroup& g);

using CMatrix = std::vector<std::vector<std::complex<double>>>;
CMatrix rho_S_matrix(const DiscriminantGroup& g);
CMatrix matmul(const CMatrix& a, const CMatrix& b);

// Unary theta series theta_{1/2,d}: component r holds sum_{n = r (2d)} q^{n^2/4d}.
VectorSeries unary_theta(long d, const Rational& trunc);

// Atkin-Lehner involution on Z/2dZ for an exact divisor c || d:
// sigma_c(x) = -x mod 2c and = x mod 2d/c.
long sigma_involution(long d, long c, long x);
VectorSeries atkin_lehner(const VectorSeries& v, long c);

// f (x) g on the direct sum group: component (mu,nu) = f_mu * g_nu.
VectorSeries tensor(const VectorSeries& f, const VectorSeries& g);

// Tensor product collapsed along the addition map of a shared group:
// component tau accumulates f_mu * g_nu over mu + nu = tau.
VectorSeries tensor_collapsed(const VectorSeries& f, const VectorSeries& g);

// Enumerated coset data for a finite-index sublattice K of L
// (K <= L <= L' <= K').  Elements of K'/K are indexed by K_group; to_L maps
// each of them either to the index of its class in L'/L or to npos when the
// class does not meet L'.
struct SublatticeIndex {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  DiscriminantGroup K_group = DiscriminantGroup::trivial();
  DiscriminantGroup L_group = DiscriminantGroup::trivial();
  std::vector<std::size_t> to_L;      // size K_group.order()
  std::vector<std::size_t> L_mod_K;   // K'/K indices forming the subgroup L/K

  static SublatticeIndex identity(const DiscriminantGroup& g);
  void validate() const;  // throws std::invalid_argument on inconsistent data
};

// res_{L/K}: component mu of the result is f_{mu-bar} when mu lies in L'/K, else 0.
VectorSeries restrict_to_sublattice(const VectorSeries& f_on_L, const SublatticeIndex& idx);

// tr_{L/K}: component mu-bar of the result is sum_{alpha in L/K} g_{alpha+mu}.
VectorSeries trace_to_superlattice(const VectorSeries& g_on_K, const SublatticeIndex& idx);

// <f, g> = sum_mu f_mu g_mu as a scalar series, and its constant term.
FracSeries pairing(const VectorSeries& f, const VectorSeries& g);
Rational pairing_CT(const VectorSeries& f, const VectorSeries& g);

// {g, f} = sum_h sum_n c_g(h, n) c_f(h, -n), summed over the stored terms of
// f; every required coefficient of g must lie below its truncation.
Rational serre_pairing(const VectorSeries& g, const VectorSeries& f);

}  // namespace slk::weilrep
