#include "slk/modspaces.hpp"

#include <stdexcept>

#include "slk/errors.hpp"
#include "slk/forms.hpp"

namespace slk::modspaces {

std::string level_name(Level level) { return level == Level::SL2 ? "SL2(Z)" : "Gamma0(4)"; }

namespace {

// Reduced row echelon form over Q, ordered by leading exponent.
void echelonize(std::vector<FracSeries>& rows, std::vector<long>& leading) {
  std::vector<FracSeries> done;
  std::vector<long> lead;
  std::vector<FracSeries> pending = std::move(rows);
  while (!pending.empty()) {
    std::size_t best = pending.size();
    Rational best_exp;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (pending[i].known_zero()) continue;
      Rational e = pending[i].lowest_exponent();
      if (best == pending.size() || e < best_exp) {
        best = i;
        best_exp = e;
      }
    }
    if (best == pending.size())
      throw std::logic_error("generator monomials are linearly dependent");
    FracSeries pivot = pending[best];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    Rational lead_coeff = pivot.coefficient(best_exp);
    pivot = (Rational(1) / lead_coeff) * pivot;
    if (!is_integer(best_exp)) throw std::logic_error("basis exponents must be integral");
    long e = to_int64(best_exp);
    for (FracSeries& row : pending) row = row.sub(row.coefficient(best_exp) * pivot);
    for (FracSeries& row : done) row = row.sub(row.coefficient(best_exp) * pivot);
    done.push_back(std::move(pivot));
    lead.push_back(e);
  }
  rows = std::move(done);
  leading = std::move(lead);
  for (std::size_t i = 1; i < leading.size(); ++i)
    if (leading[i] <= leading[i - 1]) throw std::logic_error("echelon leading exponents not increasing");
}

FracSeries power(const FracSeries& base, unsigned e, const Rational& trunc) {
  FracSeries out = FracSeries::constant(1, trunc);
  for (unsigned i = 0; i < e; ++i) out = out.mul(base);
  return out;
}

}  // namespace

SpaceBasis basis_gamma0_4(unsigned k, const Rational& trunc) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("basis_gamma0_4 requires even k >= 2");
  if (trunc <= Rational(sturm_bound(k, Level::Gamma0_4)))
    throw InsufficientPrecision("basis truncation must exceed the Sturm bound");
  FracSeries theta2 = forms::jacobi_theta(trunc).mul(forms::jacobi_theta(trunc));
  FracSeries f2 = forms::F_weight2(trunc);
  SpaceBasis out;
  out.level = Level::Gamma0_4;
  out.weight = k;
  std::vector<FracSeries> rows;
  for (unsigned b = 0; 2 * b <= k; ++b) {
    unsigned a = k - 2 * b;  // theta^{2a} F^b with a + 2b = k
    rows.push_back(power(theta2, a, trunc).mul(power(f2, b, trunc)));
    out.provenance.emplace_back(a, b);
  }
  echelonize(rows, out.leading_exponents);
  out.basis = std::move(rows);
  return out;
}

SpaceBasis basis_sl2(unsigned k, const Rational& trunc) {
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("basis_sl2 requires even k >= 4");
  if (trunc <= Rational(sturm_bound(k, Level::SL2)))
    throw InsufficientPrecision("basis truncation must exceed the Sturm bound");
  FracSeries e4 = forms::eisenstein(4, trunc);
  FracSeries e6 = forms::eisenstein(6, trunc);
  SpaceBasis out;
  out.level = Level::SL2;
  out.weight = k;
  std::vector<FracSeries> rows;
  for (unsigned b = 0; 6 * b <= k; ++b) {
    if ((k - 6 * b) % 4 != 0) continue;
    unsigned a = (k - 6 * b) / 4;
    rows.push_back(power(e4, a, trunc).mul(power(e6, b, trunc)));
    out.provenance.emplace_back(a, b);
  }
  if (rows.empty()) throw std::logic_error("empty generator set");
  echelonize(rows, out.leading_exponents);
  out.basis = std::move(rows);
  return out;
}

long sturm_bound(unsigned k, Level level) {
  long index = (level == Level::SL2) ? 1 : 6;
  long num = static_cast<long>(k) * index;
  return (num + 11) / 12;
}

MembershipResult membership(const FracSeries& series, const SpaceBasis& basis, long margin) {
  if (margin < 0) throw std::invalid_argument("margin must be nonnegative");
  if (!series.has_integral_exponents())
    throw NonIntegralExponent("membership requires integral exponents");
  long sturm = sturm_bound(basis.weight, basis.level);
  MembershipResult out;
  out.status = MembershipResult::Status::InsufficientPrecision;
  // The pivots themselves sit at exponents up to the Sturm bound, so the
  // series must be exact strictly beyond it.
  if (series.trunc() < Rational(sturm + margin) || series.trunc() <= Rational(sturm)) return out;

  Rational verify_bound = series.trunc();
  for (const FracSeries& b : basis.basis) verify_bound = std::min(verify_bound, b.trunc());
  if (verify_bound < Rational(sturm + margin)) return out;

  // The echelon leading exponents all lie at or below the Sturm bound, so the
  // candidate combination is read off from the initial coefficients.
  FracSeries residue = series;
  out.combination.reserve(basis.basis.size());
  for (std::size_t i = 0; i < basis.basis.size(); ++i) {
    if (basis.leading_exponents[i] > sturm)
      throw std::logic_error("echelon pivot beyond the Sturm bound");
    Rational c = residue.coefficient(Rational(basis.leading_exponents[i]));
    out.combination.push_back(c);
    if (c != 0) residue = residue.sub(c * basis.basis[i]);
  }
  for (const auto& [e, c] : residue.terms()) {
    Rational exponent(e, residue.exponent_den());
    if (exponent < verify_bound && c != 0) {
      out.status = MembershipResult::Status::NotMember;
      out.first_failure = exponent;
      out.combination.clear();
      return out;
    }
  }
  out.status = MembershipResult::Status::Member;
  return out;
}

bool combination_is_cuspidal(const MembershipResult& result, const SpaceBasis& basis) {
  if (!result.is_member()) return false;
  for (std::size_t i = 0; i < basis.basis.size(); ++i)
    if (basis.leading_exponents[i] == 0 && result.combination[i] != 0) return false;
  return true;
}

}  // namespace slk::modspaces
