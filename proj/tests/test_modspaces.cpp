#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slk/errors.hpp"
#include "slk/forms.hpp"
#include "slk/modspaces.hpp"

using namespace slk;
using namespace slk::modspaces;

TEST_CASE("sturm bounds") {
  CHECK(sturm_bound(4, Level::SL2) == 1);
  CHECK(sturm_bound(4, Level::Gamma0_4) == 2);
  CHECK(sturm_bound(12, Level::Gamma0_4) == 6);
  CHECK(sturm_bound(12, Level::SL2) == 1);
  CHECK(sturm_bound(14, Level::SL2) == 2);
}

TEST_CASE("basis dimensions on Gamma0(4)") {
  for (unsigned k = 2; k <= 12; k += 2) {
    SpaceBasis b = basis_gamma0_4(k, Rational(80));
    CHECK(b.basis.size() == k / 2 + 1);
    for (std::size_t i = 1; i < b.leading_exponents.size(); ++i)
      CHECK(b.leading_exponents[i] > b.leading_exponents[i - 1]);
  }
}

TEST_CASE("basis dimensions on SL2(Z) match the standard formula") {
  for (unsigned k = 4; k <= 36; k += 2) {
    SpaceBasis b = basis_sl2(k, Rational(30));
    unsigned expected = k / 12 + (k % 12 == 2 ? 0 : 1);
    CHECK(b.basis.size() == expected);
  }
}

TEST_CASE("membership of basis elements and simple forms") {
  Rational T(80);
  SpaceBasis b4 = basis_sl2(4, T);
  auto mr = membership(forms::eisenstein(4, T), b4, 10);
  REQUIRE(mr.is_member());
  CHECK(mr.combination == std::vector<Rational>{Rational(1)});

  // every echelon basis element is a member with a unit combination
  SpaceBasis g8 = basis_gamma0_4(8, T);
  for (std::size_t i = 0; i < g8.basis.size(); ++i) {
    auto unit = membership(g8.basis[i], g8, 10);
    REQUIRE(unit.is_member());
    for (std::size_t k = 0; k < unit.combination.size(); ++k)
      CHECK(unit.combination[k] == (k == i ? 1 : 0));
  }

  // the zero series is a member via the zero combination
  auto zero = membership(FracSeries::zero(T), g8, 10);
  REQUIRE(zero.is_member());
  for (const Rational& c : zero.combination) CHECK(c == 0);
}

TEST_CASE("perturbations beyond the Sturm bound are caught") {
  Rational T(80);
  SpaceBasis b4 = basis_sl2(4, T);
  FracSeries spoiled = forms::eisenstein(4, T).add(FracSeries::monomial(1, 50, T));
  auto mr = membership(spoiled, b4, 10);
  CHECK(mr.status == MembershipResult::Status::NotMember);
  REQUIRE(mr.first_failure.has_value());
  CHECK(*mr.first_failure == 50);
}

TEST_CASE("membership margins") {
  Rational T(80);
  SpaceBasis b4 = basis_sl2(4, T);
  FracSeries e4 = forms::eisenstein(4, T);
  auto tight = membership(e4, b4, 5);
  REQUIRE(tight.is_member());
  // the truncation of 80 supports margins up to 79 (Sturm bound 1)
  auto loose = membership(e4, b4, 100);
  REQUIRE(loose.status == MembershipResult::Status::InsufficientPrecision);
  auto edge = membership(e4, b4, 80);
  CHECK(edge.status == MembershipResult::Status::InsufficientPrecision);
  // margin only gates precision; the combination is stable under lowering it
  for (long margin : {0L, 1L, 2L, 5L, 20L, 50L, 79L}) {
    auto mr = membership(e4, b4, margin);
    REQUIRE(mr.is_member());
    CHECK(mr.combination == tight.combination);
  }
}

TEST_CASE("insufficient precision is reported, not guessed") {
  SpaceBasis b4 = basis_sl2(4, Rational(80));
  FracSeries short_series = forms::eisenstein(4, Rational(3));
  CHECK(membership(short_series, b4, 10).status == MembershipResult::Status::InsufficientPrecision);
  FracSeries fractional = FracSeries::monomial(1, frac(1, 2), Rational(80));
  CHECK_THROWS_AS(membership(fractional, b4, 10), NonIntegralExponent);
}
