#include "slk/selfcheck.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "slk/arith.hpp"
#include "slk/forms.hpp"
#include "slk/lattice.hpp"
#include "slk/weilrep.hpp"

namespace slk::selfcheck {

namespace {

CheckResult hurwitz_check() {
  const long limit = 2000;
  arith::HurwitzTable table = arith::HurwitzTable::build_uncached(limit);
  for (long n = 0; n <= limit; ++n) {
    Rational h = table.value(n);
    if (h != arith::oracle::hurwitz_enumeration(n))
      return {"hurwitz-vs-enumeration", false, "mismatch at n = " + std::to_string(n)};
    if (!is_integer(12 * h))
      return {"hurwitz-vs-enumeration", false, "12 H(n) not integral at n = " + std::to_string(n)};
  }
  return {"hurwitz-vs-enumeration", true, "n <= 2000, 12 H(n) integral throughout"};
}

CheckResult partition_check() {
  for (long n = 0; n <= 500; ++n)
    if (arith::partition_p(n) != arith::oracle::partition_dp(n))
      return {"partition-recurrence-vs-dp", false, "mismatch at n = " + std::to_string(n)};
  return {"partition-recurrence-vs-dp", true, "n <= 500"};
}

CheckResult spt_check() {
  for (long n = 1; n <= 60; ++n)
    if (arith::spt(n) != arith::oracle::spt_enumeration(n))
      return {"spt-series-vs-enumeration", false, "mismatch at n = " + std::to_string(n)};
  return {"spt-series-vs-enumeration", true, "n <= 60"};
}

CheckResult eta_check() {
  Rational trunc = Rational(50) + frac(1, 24);
  FracSeries sum = forms::dedekind_eta(trunc, forms::EtaVariant::Sum);
  FracSeries prod = forms::dedekind_eta(trunc, forms::EtaVariant::Product);
  if (sum != prod) return {"eta-sum-vs-product", false, "series differ below q^50"};
  return {"eta-sum-vs-product", true, "identical through q^50"};
}

CheckResult min_identity_check() {
  std::mt19937 rng(20210901);
  std::uniform_int_distribution<long> coord(-40, 40);
  std::uniform_int_distribution<long> ypart(1, 7);
  lattice::Lattice11 L = lattice::Lattice11::hyperbolic();
  int tested = 0;
  while (tested < 1000) {
    long x1 = coord(rng), x2 = coord(rng);
    long y1 = ypart(rng), y2 = ypart(rng);
    if ((x1 == 0 && x2 == 0) || y1 * y2 > 50) continue;
    ++tested;
    lattice::SpecialPoint w = lattice::make_special_point(L, Rational(y1), Rational(y2));
    lattice::Vec2 x{Rational(x1), Rational(x2)};
    auto [qw, qperp] = lattice::project(x, w);
    Rational d(w.d_P);
    Rational min_val = std::min(abs(x[0] * w.y[1]), abs(x[1] * w.y[0]));
    // Doubly squared form of (sqrt|q_perp| - sqrt|q_w|) sqrt(d) = +-min:
    // (d(A+B) - min^2)^2 = 4 d^2 A B, with A >= B exactly when q(X) <= 0.
    Rational lhs = d * (qperp + qw) - min_val * min_val;
    if (lhs * lhs != 4 * d * d * qperp * qw)
      return {"projection-min-identity", false, "square identity fails"};
    if (lhs < 0) return {"projection-min-identity", false, "radical isolation sign fails"};
    if ((lattice::qform(x) <= 0) != (qperp >= qw))
      return {"projection-min-identity", false, "sign classification fails"};
    // Bilinear cross-identity -2 X1 X2 |y^2| + (X,y)^2 = (X1 y2 - X2 y1)^2.
    Rational cross = x[0] * w.y[1] - x[1] * w.y[0];
    if (-2 * lattice::qform(x) * (2 * d) + lattice::bilinear(x, w.y) * lattice::bilinear(x, w.y) !=
        cross * cross)
      return {"projection-min-identity", false, "bilinear identity fails"};
    // Floating route against the exact min formula.
    double direct =
        std::pow(std::sqrt(to_double(qperp)) - std::sqrt(to_double(qw)), 2.0 * 1 + 1.0);
    double via_min = lattice::min_weight(x, w, 1);
    if (std::fabs(direct - via_min) > 1e-9 * (1.0 + std::fabs(direct)))
      return {"projection-min-identity", false, "floating routes disagree"};
  }
  return {"projection-min-identity", true, "1000 pseudorandom (X, y), exact"};
}

CheckResult theta_trace_check() {
  struct Case {
    lattice::Lattice11 L;
    Rational dir1, dir2;
    const char* name;
  };
  std::vector<Case> cases{
      {lattice::Lattice11::hyperbolic(), Rational(1), Rational(1), "U, y=(1,1)"},
      {lattice::Lattice11::scaled_pair(1), Rational(1), Rational(1), "Z(1)+Z(-1), y=(1,1)"},
      {lattice::Lattice11::scaled_pair(1), Rational(1), Rational(3), "Z(1)+Z(-1), y=(1,3)"},
  };
  Rational trunc(21);
  for (const Case& c : cases) {
    lattice::SpecialPoint w = lattice::make_special_point(c.L, c.dir1, c.dir2);
    weilrep::SublatticeIndex idx = lattice::make_sublattice_index(c.L, w);
    weilrep::VectorSeries theta_P = weilrep::unary_theta(to_int64(w.d_P), trunc);
    weilrep::VectorSeries theta_N = weilrep::unary_theta(to_int64(w.d_N), trunc);
    weilrep::VectorSeries theta_K = weilrep::tensor(theta_P, theta_N).with_group(idx.K_group);
    weilrep::VectorSeries traced = weilrep::trace_to_superlattice(theta_K, idx);
    weilrep::VectorSeries direct = lattice::majorant_theta(c.L, w, trunc);
    if (!traced.agrees_with(direct))
      return {"theta-trace-identity", false, std::string("mismatch for ") + c.name};
  }
  return {"theta-trace-identity", true, "3 lattice/point pairs through q^20"};
}

CheckResult rho_check() {
  using weilrep::CMatrix;
  std::vector<weilrep::DiscriminantGroup> groups;
  for (long d = 1; 2 * d <= 48; ++d)
    for (int s : {+1, -1}) groups.push_back(weilrep::DiscriminantGroup({{d, s}}));
  for (long d1 = 1; d1 <= 12; ++d1)
    for (long d2 = d1; d1 * d2 <= 12; ++d2)
      for (int s1 : {+1, -1})
        for (int s2 : {+1, -1})
          groups.push_back(weilrep::DiscriminantGroup({{d1, s1}, {d2, s2}}));

  for (const auto& g : groups) {
    std::size_t n = g.order();
    CMatrix S = weilrep::rho_S_matrix(g);
    std::vector<Rational> phases = weilrep::rho_T_phases(g);
    CMatrix T(n, std::vector<std::complex<double>>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      double t = 2.0 * M_PI * to_double(phases[i]);
      T[i][i] = {std::cos(t), std::sin(t)};
    }
    // unitarity
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::complex<double> dot = 0.0;
        for (std::size_t k = 0; k < n; ++k) dot += S[i][k] * std::conj(S[j][k]);
        double want = (i == j) ? 1.0 : 0.0;
        if (std::abs(dot - want) > 1e-12)
          return {"weil-generator-relations", false, "rho_S not unitary"};
      }
    CMatrix ST = weilrep::matmul(S, T);
    CMatrix ST3 = weilrep::matmul(weilrep::matmul(ST, ST), ST);
    CMatrix S2 = weilrep::matmul(S, S);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (std::abs(ST3[i][j] - S2[i][j]) > 1e-12)
          return {"weil-generator-relations", false, "(ST)^3 != S^2"};
  }
  std::ostringstream os;
  os << groups.size() << " groups of order <= 48, tolerance 1e-12";
  return {"weil-generator-relations", true, os.str()};
}

}  // namespace

std::vector<CheckResult> run_all() {
  return {hurwitz_check(),      partition_check(),   spt_check(), eta_check(),
          min_identity_check(), theta_trace_check(), rho_check()};
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace slk::selfcheck
