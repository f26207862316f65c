#include "slk/lift_numeric.hpp"

#include <cmath>
#include <stdexcept>

#include "slk/errors.hpp"

namespace slk::lift {

double gauss_2f1(double a, double b, double c, double z) {
  if (!(std::fabs(z) < 1.0)) throw std::domain_error("gauss_2f1 requires |z| < 1");
  if (c <= 0.0 && c == std::floor(c)) throw std::domain_error("gauss_2f1 pole in c");
  double term = 1.0;
  double sum = 1.0;
  constexpr std::size_t cap = 1000000;
  for (std::size_t k = 0; k < cap; ++k) {
    double kk = static_cast<double>(k);
    term *= (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * z;
    sum += term;
    if (std::fabs(term) <= 1e-16 * std::fabs(sum)) return sum;
  }
  throw NoConvergence("gauss_2f1 did not converge within the term cap");
}

double closed_form_n1(unsigned j, double z) {
  if (!(z < 1.0)) throw std::domain_error("closed_form_n1 requires z < 1");
  double base = 0.5 + 0.5 * std::sqrt(1.0 - z);
  return std::pow(base, -1.0 - 2.0 * static_cast<double>(j));
}

double series_lift(const LiftInput& input) {
  unsigned j = input.j;
  double dj = static_cast<double>(j);
  double constant = std::pow(4.0 * M_PI, 0.5 + dj) * std::tgamma(1.0 + dj) *
                    std::tgamma(0.5 + dj) / std::tgamma(2.0 + 2.0 * dj);
  double z1 = input.z[0], z2 = input.z[1];
  if (!(z1 > 0.0 && z2 > 0.0)) throw std::domain_error("z must be a positive vector");
  double total = 0.0;
  for (const Support& s : input.support) {
    if (s.m >= 0) throw std::invalid_argument("support must sit at negative norms");
    double inner_sum = 0.0;
    for (const lattice::Vec2& x : lattice::enumerate_dual_vectors(input.L, s.m, s.coset_rep)) {
      double x1 = to_double(x[0]), x2 = to_double(x[1]);
      double inner = x1 * z2 + x2 * z1;  // (X, z)
      double scale = std::fabs(x1 * z2) + std::fabs(x2 * z1);
      if (std::fabs(inner) <= 1e-12 * scale)
        throw DegeneratePoint("q(X_z) vanishes for a vector in the support");
      double q_x = to_double(s.m);
      double q_z = inner * inner / (4.0 * z1 * z2);  // q(X_z) = (X,z)^2 / (2 |z|^2)
      double q_perp = q_x - q_z;                     // q(X_{z-perp}) < 0
      double zeta = q_x / q_perp;                    // in (0, 1)
      inner_sum += std::pow(std::fabs(q_x), 1.0 + 2.0 * dj) * std::pow(-q_perp, -0.5 - dj) *
                   gauss_2f1(0.5 + dj, 1.0 + dj, 2.0 + 2.0 * dj, zeta);
    }
    total += s.c_plus * inner_sum;
  }
  return constant * total;
}

double special_point_lift(const lattice::Lattice11& L, const std::vector<Support>& support,
                       const lattice::SpecialPoint& w, unsigned j) {
  double dj = static_cast<double>(j);
  double constant = std::pow(4.0, 1.0 + 2.0 * dj) * std::pow(M_PI, 0.5 + dj) *
                    std::tgamma(1.0 + dj) * std::tgamma(0.5 + dj) / std::tgamma(2.0 + 2.0 * dj);
  if (w.d_P_is_square()) {
    std::vector<lattice::LiftCoefficient> coeffs;
    coeffs.reserve(support.size());
    for (const Support& s : support) {
      // Exact rational carrier for the double coefficient.
      Rational v(s.c_plus);
      v.canonicalize();
      coeffs.push_back({s.coset_rep, s.m, v});
    }
    return constant * to_double(lattice::lift_sum(L, coeffs, w, j));
  }
  double total = 0.0;
  for (const Support& s : support) {
    if (s.m >= 0) throw std::invalid_argument("support must sit at negative norms");
    for (const lattice::Vec2& x : lattice::enumerate_dual_vectors(L, s.m, s.coset_rep))
      total += s.c_plus * lattice::min_weight(x, w, j);
  }
  return constant * total;
}

}  // namespace slk::lift
