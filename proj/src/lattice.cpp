#include "slk/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace slk::lattice {

using weilrep::DiscriminantGroup;
using weilrep::Factor;
using weilrep::SublatticeIndex;
using weilrep::VectorSeries;

Rational qform(const Vec2& x) { return x[0] * x[1]; }

Rational bilinear(const Vec2& x, const Vec2& y) { return x[0] * y[1] + x[1] * y[0]; }

Vec2 vsub(const Vec2& a, const Vec2& b) { return {a[0] - b[0], a[1] - b[1]}; }

Lattice11::Lattice11(const Vec2& b1, const Vec2& b2) : basis_{b1, b2} {
  Rational det = b1[0] * b2[1] - b1[1] * b2[0];
  if (det == 0) throw std::invalid_argument("lattice basis is degenerate");
  if (!is_integer(qform(b1)) || !is_integer(qform(b2)) || !is_integer(bilinear(b1, b2)))
    throw std::invalid_argument("lattice is not even integral under Q(a,b) = ab");
}

Lattice11 Lattice11::hyperbolic() { return Lattice11({Rational(1), Rational(0)}, {Rational(0), Rational(1)}); }

Lattice11 Lattice11::scaled_pair(long d) {
  return Lattice11({Rational(1), Rational(d)}, {Rational(-1), Rational(d)});
}

std::array<std::array<Rational, 2>, 2> Lattice11::gram() const {
  std::array<std::array<Rational, 2>, 2> g;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g[i][j] = bilinear(basis_[i], basis_[j]);
  return g;
}

Rational Lattice11::gram_det() const {
  auto g = gram();
  return g[0][0] * g[1][1] - g[0][1] * g[1][0];
}

Vec2 Lattice11::coords(const Vec2& x) const {
  const Vec2& b1 = basis_[0];
  const Vec2& b2 = basis_[1];
  Rational det = b1[0] * b2[1] - b1[1] * b2[0];
  return {(x[0] * b2[1] - x[1] * b2[0]) / det, (b1[0] * x[1] - b1[1] * x[0]) / det};
}

Vec2 Lattice11::from_coords(const Vec2& c) const {
  return {c[0] * basis_[0][0] + c[1] * basis_[1][0], c[0] * basis_[0][1] + c[1] * basis_[1][1]};
}

bool Lattice11::contains(const Vec2& x) const {
  Vec2 c = coords(x);
  return is_integer(c[0]) && is_integer(c[1]);
}

bool Lattice11::dual_contains(const Vec2& x) const {
  return is_integer(bilinear(x, basis_[0])) && is_integer(bilinear(x, basis_[1]));
}

std::array<Vec2, 2> Lattice11::dual_basis() const {
  auto g = gram();
  Rational det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  // inverse Gram columns give dual coordinates
  std::array<std::array<Rational, 2>, 2> inv;
  inv[0][0] = g[1][1] / det;
  inv[0][1] = -g[0][1] / det;
  inv[1][0] = -g[1][0] / det;
  inv[1][1] = g[0][0] / det;
  std::array<Vec2, 2> dual;
  for (int j = 0; j < 2; ++j) dual[j] = from_coords({inv[0][j], inv[1][j]});
  return dual;
}

bool SpecialPoint::d_P_is_square() const {
  return mpz_perfect_square_p(d_P.get_mpz_t()) != 0;
}

Integer SpecialPoint::sqrt_d_P() const {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), d_P.get_mpz_t());
  return r;
}

namespace {

// Primitive generator of L meeting the ray through `dir`, as a lattice vector.
Vec2 primitive_on_ray(const Lattice11& L, const Vec2& dir) {
  Vec2 c = L.coords(dir);
  Integer q1 = c[0].get_den(), q2 = c[1].get_den();
  Integer t = q1 / gcd(q1, q2) * q2;  // lcm
  Integer p1 = Integer(c[0].get_num()) * (t / q1);
  Integer p2 = Integer(c[1].get_num()) * (t / q2);
  Integer g = gcd(p1, p2);
  if (g == 0) throw std::invalid_argument("direction must be nonzero");
  Vec2 prim = L.from_coords({Rational(p1 / g), Rational(p2 / g)});
  return prim;
}

}  // namespace

SpecialPoint make_special_point(const Lattice11& L, const Rational& dir1, const Rational& dir2) {
  if (dir1 <= 0 || dir2 <= 0) throw std::invalid_argument("special point needs a positive direction");
  Vec2 y = primitive_on_ray(L, {dir1, dir2});
  if (y[0] < 0) y = {-y[0], -y[1]};
  if (y[0] <= 0 || y[1] <= 0) throw std::invalid_argument("positive line does not meet the lattice positively");
  Vec2 yp = primitive_on_ray(L, {-dir1, dir2});
  if (yp[1] < 0) yp = {-yp[0], -yp[1]};
  SpecialPoint w;
  w.y = y;
  w.yperp = yp;
  Rational qp = qform(y);
  Rational qn = -qform(yp);
  if (!is_integer(qp) || !is_integer(qn) || qp <= 0 || qn <= 0)
    throw std::invalid_argument("special point norms must be positive integers");
  w.d_P = qp.get_num();
  w.d_N = qn.get_num();
  return w;
}

std::pair<Rational, Rational> project(const Vec2& x, const SpecialPoint& w) {
  Rational inner = bilinear(x, w.y);
  Rational norm2 = 2 * Rational(w.d_P);  // (y, y)
  Rational q_w = inner * inner / (2 * norm2);
  Rational q_perp_abs = q_w - qform(x);  // q(X_{w-perp}) <= 0 always
  return {q_w, q_perp_abs};
}

namespace {

Rational min_weight_core(const Vec2& x, const SpecialPoint& w) {
  Rational u = abs(x[0] * w.y[1]);
  Rational v = abs(x[1] * w.y[0]);
  return std::min(u, v);
}

}  // namespace

Rational min_weight_exact(const Vec2& x, const SpecialPoint& w, unsigned j) {
  if (!w.d_P_is_square())
    throw std::invalid_argument("exact min-weight needs d_P to be a perfect square");
  Rational m = min_weight_core(x, w);
  Rational value = rat_pow(m, 2 * j + 1) / Rational(int_pow(w.sqrt_d_P(), 2 * j + 1));
  return qform(x) > 0 ? -value : value;
}

double min_weight(const Vec2& x, const SpecialPoint& w, unsigned j) {
  double m = to_double(min_weight_core(x, w));
  double value = std::pow(m / std::sqrt(to_double(Rational(w.d_P))), 2.0 * j + 1.0);
  return qform(x) > 0 ? -value : value;
}

std::vector<Vec2> enumerate_dual_vectors(const Lattice11& L, const Rational& m,
                                         const std::optional<Vec2>& coset_rep) {
  if (m == 0) throw std::invalid_argument("enumeration requires q(X) = m != 0");
  auto dual = L.dual_basis();
  Integer d1 = lcm(Integer(dual[0][0].get_den()), Integer(dual[1][0].get_den()));
  Integer d2 = lcm(Integer(dual[0][1].get_den()), Integer(dual[1][1].get_den()));
  Rational big = m * Rational(d1) * Rational(d2);
  std::vector<Vec2> out;
  if (!is_integer(big)) return out;
  Integer target = big.get_num();
  Integer abs_target = abs(target);
  std::int64_t bound = to_int64(abs_target);
  for (std::int64_t s = 1; s * s <= bound; ++s) {
    if (bound % s != 0) continue;
    std::int64_t pair[2] = {s, bound / s};
    int count = (pair[0] == pair[1]) ? 1 : 2;
    for (int i = 0; i < count; ++i) {
      std::int64_t s1_abs = pair[i];
      std::int64_t s2_abs = bound / s1_abs;
      for (int sign1 : {+1, -1}) {
        std::int64_t s1 = sign1 * s1_abs;
        // sign of s2 follows from s1 * s2 = target
        std::int64_t s2 = (target > 0) == (s1 > 0) ? s2_abs : -s2_abs;
        Vec2 x{Rational(s1) / Rational(d1), Rational(s2) / Rational(d2)};
        if (!L.dual_contains(x)) continue;
        if (coset_rep && !L.contains(vsub(x, *coset_rep))) continue;
        out.push_back(x);
      }
    }
  }
  return out;
}

Rational lift_sum(const Lattice11& L, const std::vector<LiftCoefficient>& coeffs,
                  const SpecialPoint& w, unsigned j) {
  if (!w.d_P_is_square())
    throw std::invalid_argument("exact lift_sum needs d_P to be a perfect square");
  Rational total(0);
  for (const LiftCoefficient& c : coeffs) {
    if (c.m >= 0) throw std::invalid_argument("lift_sum coefficients must be supported at m < 0");
    for (const Vec2& x : enumerate_dual_vectors(L, c.m, c.coset_rep))
      total += c.value * min_weight_exact(x, w, j);
  }
  return total;
}

double lift_sum_real(const Lattice11& L, const std::vector<LiftCoefficient>& coeffs,
                     const SpecialPoint& w, unsigned j) {
  double total = 0.0;
  for (const LiftCoefficient& c : coeffs) {
    if (c.m >= 0) throw std::invalid_argument("lift_sum coefficients must be supported at m < 0");
    for (const Vec2& x : enumerate_dual_vectors(L, c.m, c.coset_rep))
      total += to_double(c.value) * min_weight(x, w, j);
  }
  return total;
}

namespace {

// Labeling of L'/L for the supported lattice shapes.
struct DualClassLabeler {
  DiscriminantGroup group = DiscriminantGroup::trivial();
  bool trivial = false;
  long d = 0;  // orthogonal-basis case: norms +d, -d

  static DualClassLabeler for_lattice(const Lattice11& L) {
    DualClassLabeler out;
    Rational det = L.gram_det();
    if (det == -1 || det == 1) {
      out.trivial = true;
      out.group = DiscriminantGroup::trivial();
      return out;
    }
    Rational q1 = qform(L.basis(0)), q2 = qform(L.basis(1));
    if (bilinear(L.basis(0), L.basis(1)) == 0 && q1 > 0 && q2 == -q1 && is_integer(q1)) {
      out.d = to_int64(Integer(q1.get_num()));
      out.group = DiscriminantGroup({Factor{out.d, +1}, Factor{out.d, -1}});
      return out;
    }
    throw std::invalid_argument("unsupported lattice shape for dual class labeling");
  }

  std::size_t label(const Lattice11& L, const Vec2& x) const {
    if (!L.dual_contains(x)) throw std::invalid_argument("vector is not in the dual lattice");
    if (trivial) return 0;
    Vec2 c = L.coords(x);
    Rational r1 = c[0] * (2 * d), r2 = c[1] * (2 * d);
    if (!is_integer(r1) || !is_integer(r2))
      throw std::logic_error("dual vector has non-half-integral coordinates");
    return group.index_of({to_int64(r1), to_int64(r2)});
  }
};

}  // namespace

SublatticeIndex make_sublattice_index(const Lattice11& L, const SpecialPoint& w) {
  if (!L.contains(w.y) || !L.contains(w.yperp))
    throw std::invalid_argument("special point generators must lie in the lattice");
  DualClassLabeler labeler = DualClassLabeler::for_lattice(L);
  long dp = to_int64(w.d_P), dn = to_int64(w.d_N);
  DiscriminantGroup K_group({Factor{dp, +1}, Factor{dn, -1}});

  SublatticeIndex idx;
  idx.K_group = K_group;
  idx.L_group = labeler.group;
  idx.to_L.assign(K_group.order(), SublatticeIndex::npos);
  for (std::size_t i = 0; i < K_group.order(); ++i) {
    auto e = K_group.element(i);
    Vec2 x{frac(e[0], 2 * dp) * w.y[0] + frac(e[1], 2 * dn) * w.yperp[0],
           frac(e[0], 2 * dp) * w.y[1] + frac(e[1], 2 * dn) * w.yperp[1]};
    if (L.dual_contains(x)) idx.to_L[i] = labeler.label(L, x);
    if (L.contains(x)) idx.L_mod_K.push_back(i);
  }
  idx.validate();
  // The quadratic forms must agree class by class.
  for (std::size_t i = 0; i < K_group.order(); ++i) {
    if (idx.to_L[i] == SublatticeIndex::npos) continue;
    Rational qK = K_group.q_value(K_group.element(i));
    Rational qL = idx.L_group.q_value(idx.L_group.element(idx.to_L[i]));
    if (qK != qL) throw std::invalid_argument("coset data is inconsistent with the quadratic form");
  }
  return idx;
}

VectorSeries majorant_theta(const Lattice11& L, const SpecialPoint& w, const Rational& trunc) {
  if (trunc <= 0) throw std::invalid_argument("majorant_theta requires positive truncation");
  DualClassLabeler labeler = DualClassLabeler::for_lattice(L);
  // The series runs over the full dual lattice, one component per class.
  auto maj = [&](const Vec2& x) -> Rational {
    auto [qw, qperp] = project(x, w);
    return qw + qperp;
  };
  auto dual = L.dual_basis();
  Vec2 v12{dual[0][0] + dual[1][0], dual[0][1] + dual[1][1]};
  Rational A = maj(dual[0]);
  Rational C = maj(dual[1]);
  Rational B = maj(v12) - A - C;
  Rational disc = 4 * A * C - B * B;
  if (disc <= 0) throw std::logic_error("majorant form is not positive definite");
  long bound1 = static_cast<long>(std::sqrt(to_double(4 * C * trunc / disc))) + 2;
  long bound2 = static_cast<long>(std::sqrt(to_double(4 * A * trunc / disc))) + 2;

  Integer den_z = lcm(lcm(Integer(A.get_den()), Integer(C.get_den())), Integer(B.get_den()));
  std::int64_t den = to_int64(den_z);
  std::vector<FracSeries::TermMap> terms(labeler.group.order());
  for (long c1 = -bound1; c1 <= bound1; ++c1) {
    for (long c2 = -bound2; c2 <= bound2; ++c2) {
      Vec2 x{Rational(c1) * dual[0][0] + Rational(c2) * dual[1][0],
             Rational(c1) * dual[0][1] + Rational(c2) * dual[1][1]};
      Rational e = maj(x);
      if (e >= trunc) continue;
      Rational scaled = e * den;
      if (!is_integer(scaled)) throw std::logic_error("majorant exponent has unexpected denominator");
      terms[labeler.label(L, x)][to_int64(scaled)] += 1;
    }
  }
  std::vector<FracSeries> comps;
  comps.reserve(terms.size());
  for (auto& t : terms) comps.push_back(FracSeries::from_terms(den, std::move(t), trunc));
  return VectorSeries(labeler.group, std::move(comps));
}

}  // namespace slk::lattice
