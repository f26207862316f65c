#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include <numeric>

#include "slk/arith.hpp"
#include "slk/forms.hpp"
#include "slk/lattice.hpp"
#include "slk/weilrep.hpp"

using namespace slk;
using namespace slk::weilrep;

TEST_CASE("discriminant group basics") {
  DiscriminantGroup g({{1, +1}, {1, -1}});  // Z(1) + Z(-1)
  CHECK(g.order() == 4);
  CHECK(g.signature() == std::pair<int, int>(1, 1));
  CHECK(g.q_value({1, 0}) == frac(1, 4));
  CHECK(g.q_value({0, 1}) == frac(3, 4));  // -1/4 mod 1
  CHECK(g.q_value({1, 1}) == 0);
  CHECK(g.q_value(g.negate({1, 0})) == g.q_value({1, 0}));
  // bilinear form is symmetric
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t k = 0; k < g.order(); ++k)
      CHECK(g.bilinear(g.element(i), g.element(k)) == g.bilinear(g.element(k), g.element(i)));
}

TEST_CASE("rho_T phases") {
  DiscriminantGroup g({{1, +1}});
  auto phases = rho_T_phases(g);
  CHECK(phases[g.index_of({1})] == frac(1, 4));  // e(1/4) = i
  CHECK(phases[g.index_of({0})] == 0);
}

TEST_CASE("rho_S squared is e((s-r)/4) times the negation permutation") {
  for (auto factors : {std::vector<Factor>{{1, +1}}, std::vector<Factor>{{3, +1}},
                       std::vector<Factor>{{2, -1}}, std::vector<Factor>{{1, +1}, {1, -1}}}) {
    DiscriminantGroup g(factors);
    auto [r, s] = g.signature();
    CMatrix s2 = matmul(rho_S_matrix(g), rho_S_matrix(g));
    double t = 2.0 * M_PI * (double(s - r) / 4.0);
    std::complex<double> scalar{std::cos(t), std::sin(t)};
    for (std::size_t a = 0; a < g.order(); ++a) {
      std::size_t neg = g.index_of(g.negate(g.element(a)));
      for (std::size_t b = 0; b < g.order(); ++b) {
        std::complex<double> want = (b == neg) ? scalar : 0.0;
        CHECK(std::abs(s2[b][a] - want) < 1e-12);
      }
    }
  }
}

TEST_CASE("unary theta") {
  VectorSeries t1 = unary_theta(1, Rational(10));
  CHECK(t1.component(DiscriminantGroup::Element{0}).coefficient(Rational(0)) == 1);
  CHECK(t1.component(DiscriminantGroup::Element{1}).coefficient(frac(1, 4)) == 2);
  CHECK(t1.component(DiscriminantGroup::Element{0}).coefficient(Rational(1)) == 2);  // n = +-2
  CHECK(t1.component(DiscriminantGroup::Element{1}).coefficient(frac(9, 4)) == 2);
}

TEST_CASE("eta is the chi12 combination of the d=6 unary theta") {
  // Each square n^2 shows up in the components of both n and -n, so the
  // chi12-weighted component sum gives eta twice over.
  Rational trunc(30);
  VectorSeries t6 = unary_theta(6, trunc);
  FracSeries combo = FracSeries::zero(trunc);
  for (long r = 0; r < 12; ++r) {
    int chi = arith::kronecker12(r);
    if (chi != 0) combo = combo.add(Rational(chi) * t6.component(DiscriminantGroup::Element{r}));
  }
  CHECK(combo.agrees_with(Rational(2) * forms::dedekind_eta(trunc, forms::EtaVariant::Sum)));
}

TEST_CASE("atkin-lehner involution") {
  CHECK(sigma_involution(1, 1, 1) == 1);  // on Z/2, -x = x
  CHECK(sigma_involution(6, 2, 1) == 7);
  CHECK(sigma_involution(6, 3, 1) == 5);
  CHECK(sigma_involution(6, 6, 1) == 11);
  CHECK_THROWS_AS(sigma_involution(4, 2, 1), std::invalid_argument);  // 2 || 4 fails

  for (long d : {1L, 2L, 3L, 6L, 10L, 12L}) {
    for (long c = 1; c <= d; ++c) {
      if (d % c != 0 || std::gcd(c, d / c) != 1) continue;
      for (long x = 0; x < 2 * d; ++x)
        CHECK(sigma_involution(d, c, sigma_involution(d, c, x)) == x);
    }
  }

  // sigma_c(r)^2 = r^2 mod 4d, so components land on the same exponent class
  // mod 1 even when the literal supports differ (sigma_2 sends 1 to 7, whose
  // smallest square is 25).
  VectorSeries t6 = unary_theta(6, Rational(12));
  VectorSeries swapped = atkin_lehner(t6, 2);
  for (long r = 0; r < 12; ++r) {
    long sr = sigma_involution(6, 2, r);
    CHECK(swapped.component(DiscriminantGroup::Element{r}) ==
          t6.component(DiscriminantGroup::Element{sr}));
    CHECK((sr * sr - r * r) % (4 * 6) == 0);
    CHECK(mod1(t6.component(DiscriminantGroup::Element{sr}).lowest_exponent()) ==
          mod1(t6.component(DiscriminantGroup::Element{r}).lowest_exponent()));
  }

  // the chi12 combination of theta - theta^{sigma_2} is four copies of eta:
  // two from the +-n doubling, two because sigma_2 flips the chi12 sign
  VectorSeries diff = t6.add(atkin_lehner(t6, 2).scale(-1));
  FracSeries combo = FracSeries::zero(t6.trunc());
  for (long r = 0; r < 12; ++r) {
    int chi = arith::kronecker12(r);
    if (chi != 0) combo = combo.add(Rational(chi) * diff.component(DiscriminantGroup::Element{r}));
  }
  CHECK(combo.agrees_with(Rational(4) * forms::dedekind_eta(t6.trunc(), forms::EtaVariant::Sum)));
}

TEST_CASE("tensor product") {
  Rational trunc(8);
  VectorSeries a = unary_theta(1, trunc);
  DiscriminantGroup unit_group({});
  VectorSeries unit(unit_group, std::vector<FracSeries>{FracSeries::constant(1, trunc)});
  VectorSeries lifted = tensor(a, unit);
  CHECK(lifted.group().order() == 2);
  CHECK(lifted.component(0) == a.component(0).truncated(lifted.trunc()));

  VectorSeries prod = tensor(a, a);
  CHECK(prod.group().order() == 4);
  CHECK(prod.component(DiscriminantGroup::Element{0, 0}).coefficient(Rational(0)) == 1);
  // coefficientwise convolution definition, spot check
  FracSeries direct = a.component(0).mul(a.component(1));
  CHECK(prod.component(DiscriminantGroup::Element{0, 1}) == direct);
}

TEST_CASE("collapsed tensor accumulates along the addition map") {
  Rational trunc(12);
  VectorSeries t1 = unary_theta(1, trunc);
  VectorSeries sq = tensor_collapsed(t1, t1);
  // component tau counts pairs (n1, n2) with n1 + n2 = tau mod 2 by
  // (n1^2 + n2^2)/4; check against direct enumeration
  for (long tau = 0; tau < 2; ++tau) {
    FracSeries::TermMap terms;
    for (long n1 = -8; n1 <= 8; ++n1)
      for (long n2 = -8; n2 <= 8; ++n2) {
        if (((n1 + n2) % 2 + 2) % 2 != tau) continue;
        if (frac(n1 * n1 + n2 * n2, 4) >= trunc) continue;
        terms[n1 * n1 + n2 * n2] += 1;
      }
    FracSeries direct = FracSeries::from_terms(4, std::move(terms), trunc);
    CHECK(sq.component(DiscriminantGroup::Element{tau}).agrees_with(direct));
  }
}

TEST_CASE("restriction and trace for the identity inclusion") {
  DiscriminantGroup g({{1, +1}});
  SublatticeIndex idx = SublatticeIndex::identity(g);
  VectorSeries t = unary_theta(1, Rational(10));
  CHECK(restrict_to_sublattice(t, idx) == t);
  CHECK(trace_to_superlattice(t, idx) == t);
}

TEST_CASE("theta trace identity for the hyperbolic plane") {
  lattice::Lattice11 U = lattice::Lattice11::hyperbolic();
  lattice::SpecialPoint w = lattice::make_special_point(U, 1, 1);
  SublatticeIndex idx = lattice::make_sublattice_index(U, w);
  CHECK(idx.K_group.order() == 4);
  CHECK(idx.L_group.order() == 1);
  CHECK(idx.L_mod_K.size() == 2);

  Rational trunc(21);
  VectorSeries theta_K =
      tensor(unary_theta(1, trunc), unary_theta(1, trunc)).with_group(idx.K_group);
  VectorSeries traced = trace_to_superlattice(theta_K, idx);
  VectorSeries direct = lattice::majorant_theta(U, w, trunc);
  CHECK(traced.agrees_with(direct));
}

TEST_CASE("restriction and trace are adjoint") {
  lattice::Lattice11 L = lattice::Lattice11::scaled_pair(1);
  lattice::SpecialPoint w = lattice::make_special_point(L, 1, 3);  // index-3 sublattice
  SublatticeIndex idx = lattice::make_sublattice_index(L, w);
  CHECK(idx.K_group.order() == 36);
  CHECK(idx.L_group.order() == 4);
  CHECK(idx.L_mod_K.size() == 3);

  std::mt19937 rng(23);
  std::uniform_int_distribution<long> coeff(-3, 3), expo(0, 11);
  Rational trunc(4);
  for (int trial = 0; trial < 25; ++trial) {
    VectorSeries f(idx.L_group, trunc);
    for (std::size_t i = 0; i < idx.L_group.order(); ++i) {
      FracSeries s = FracSeries::zero(trunc);
      for (int t = 0; t < 3; ++t)
        s = s.add(FracSeries::monomial(coeff(rng), frac(expo(rng), 4), trunc));
      f.set_component(idx.L_group.element(i), s);
    }
    VectorSeries g(idx.K_group, trunc);
    for (std::size_t i = 0; i < idx.K_group.order(); ++i) {
      FracSeries s = FracSeries::zero(trunc);
      for (int t = 0; t < 2; ++t)
        s = s.add(FracSeries::monomial(coeff(rng), frac(expo(rng), 4), trunc));
      g.set_component(idx.K_group.element(i), s);
    }
    CHECK(pairing(f, trace_to_superlattice(g, idx))
              .agrees_with(pairing(restrict_to_sublattice(f, idx), g)));
  }
}

TEST_CASE("pairings") {
  DiscriminantGroup g({{1, +1}});
  Rational trunc(5);
  VectorSeries f(g, trunc), h(g, trunc);
  f.set_component({0}, FracSeries::monomial(1, -1, trunc));
  h.set_component({0}, FracSeries::monomial(1, 1, trunc));
  CHECK(pairing_CT(f, h) == 1);

  // disjoint supports pair to zero
  VectorSeries a(g, trunc), b(g, trunc);
  a.set_component({0}, FracSeries::monomial(1, 1, trunc));
  b.set_component({1}, FracSeries::monomial(1, 2, trunc));
  CHECK(pairing(a, b).known_zero());

  // serre pairing of anything against the zero series vanishes
  VectorSeries zero(g, trunc);
  CHECK(serre_pairing(h, zero) == 0);
  // and c_g(h, n) c_f(h, -n) picks up matched exponents
  CHECK(serre_pairing(h, f) == 1);
}
