#include "slk/fracseries.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "slk/errors.hpp"

namespace slk {

namespace {

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  std::int64_t g = std::gcd(a, b);
  Integer l = Integer(a / g) * Integer(b);
  return to_int64(l);
}

}  // namespace

FracSeries::FracSeries(std::int64_t den, TermMap coeffs, Rational trunc)
    : den_(den), coeffs_(std::move(coeffs)), trunc_(std::move(trunc)) {
  if (den_ < 1) throw std::invalid_argument("exponent denominator must be positive");
  drop_unknown_terms();
}

void FracSeries::drop_unknown_terms() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == 0 || frac(it->first, den_) >= trunc_)
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

FracSeries FracSeries::zero(const Rational& trunc) { return FracSeries(1, {}, trunc); }

FracSeries FracSeries::constant(const Rational& c, const Rational& trunc) {
  return monomial(c, Rational(0), trunc);
}

FracSeries FracSeries::monomial(const Rational& c, const Rational& exponent, const Rational& trunc) {
  std::int64_t den = to_int64(Integer(exponent.get_den()));
  std::int64_t num = to_int64(Integer(exponent.get_num()));
  TermMap terms;
  if (c != 0) terms[num] = c;
  return FracSeries(den, std::move(terms), trunc);
}

FracSeries FracSeries::from_terms(std::int64_t den, TermMap terms, const Rational& trunc) {
  return FracSeries(den, std::move(terms), trunc);
}

Rational FracSeries::lowest_exponent() const {
  if (coeffs_.empty()) return trunc_;
  return frac(coeffs_.begin()->first, den_);
}

Rational FracSeries::coefficient(const Rational& exponent) const {
  if (exponent >= trunc_)
    throw InsufficientPrecision("coefficient at " + exponent.get_str() +
                                " requested but series is only exact below " + trunc_.get_str());
  Rational scaled = exponent * den_;
  if (!is_integer(scaled)) return Rational(0);
  auto it = coeffs_.find(to_int64(scaled));
  return it == coeffs_.end() ? Rational(0) : it->second;
}

bool FracSeries::has_integral_exponents() const {
  for (const auto& [e, c] : coeffs_)
    if (e % den_ != 0) return false;
  return true;
}

FracSeries FracSeries::with_den(std::int64_t new_den) const {
  if (new_den == den_) return *this;
  if (new_den % den_ != 0) throw std::invalid_argument("new exponent denominator must be a multiple");
  std::int64_t f = new_den / den_;
  TermMap terms;
  for (const auto& [e, c] : coeffs_) terms[e * f] = c;
  return FracSeries(new_den, std::move(terms), trunc_);
}

FracSeries FracSeries::operator-() const { return scale(Rational(-1)); }

FracSeries FracSeries::scale(const Rational& c) const {
  if (c == 0) return FracSeries(1, {}, trunc_);
  TermMap terms;
  for (const auto& [e, v] : coeffs_) terms[e] = c * v;
  return FracSeries(den_, std::move(terms), trunc_);
}

FracSeries FracSeries::add(const FracSeries& other) const {
  std::int64_t den = checked_lcm(den_, other.den_);
  FracSeries a = with_den(den), b = other.with_den(den);
  Rational trunc = std::min(trunc_, other.trunc_);
  TermMap terms = std::move(a.coeffs_);
  for (const auto& [e, c] : b.coeffs_) {
    auto [it, inserted] = terms.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  return FracSeries(den, std::move(terms), trunc);
}

FracSeries FracSeries::sub(const FracSeries& other) const { return add(-other); }

FracSeries FracSeries::mul(const FracSeries& other) const {
  std::int64_t den = checked_lcm(den_, other.den_);
  FracSeries a = with_den(den), b = other.with_den(den);
  // Pessimistic truncation: a term of a at its lowest exponent multiplies the
  // first unknown term of b, and vice versa.
  Rational trunc = std::min(trunc_ + other.lowest_exponent(), other.trunc_ + lowest_exponent());
  TermMap terms;
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) {
      std::int64_t e = ea + eb;
      if (frac(e, den) >= trunc) continue;
      auto [it, inserted] = terms.emplace(e, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) terms.erase(it);
      }
    }
  }
  return FracSeries(den, std::move(terms), trunc);
}

FracSeries FracSeries::theta_derivative(unsigned r) const {
  if (r == 0) return *this;
  TermMap terms;
  for (const auto& [e, c] : coeffs_) {
    Rational factor = rat_pow(frac(e, den_), r);
    if (factor != 0) terms[e] = c * factor;
  }
  return FracSeries(den_, std::move(terms), trunc_);
}

FracSeries FracSeries::rescale_exponents(const Rational& c) const {
  if (c <= 0) throw std::invalid_argument("exponent rescale factor must be positive");
  std::int64_t p = to_int64(Integer(c.get_num()));
  std::int64_t q = to_int64(Integer(c.get_den()));
  std::int64_t den = to_int64(Integer(Integer(den_) * q));
  TermMap terms;
  for (const auto& [e, v] : coeffs_) terms[e * p] = v;
  return FracSeries(den, std::move(terms), c * trunc_).canonical();
}

FracSeries FracSeries::parity_part(std::int64_t residue, std::int64_t modulus) const {
  if (modulus < 1) throw std::invalid_argument("parity modulus must be positive");
  TermMap terms;
  for (const auto& [e, c] : coeffs_) {
    if (e % den_ != 0)
      throw NonIntegralExponent("parity_part requires integral exponents, found " +
                                frac(e, den_).get_str());
    std::int64_t m = e / den_;
    std::int64_t rem = (m - residue) % modulus;
    if (rem < 0) rem += modulus;
    if (rem == 0) terms[e] = c;
  }
  return FracSeries(den_, std::move(terms), trunc_);
}

FracSeries FracSeries::truncated(const Rational& new_trunc) const {
  if (new_trunc > trunc_)
    throw InsufficientPrecision("cannot raise truncation from " + trunc_.get_str() + " to " +
                                new_trunc.get_str());
  return FracSeries(den_, coeffs_, new_trunc);
}

FracSeries FracSeries::canonical() const {
  std::int64_t g = den_;
  for (const auto& [e, c] : coeffs_) {
    g = std::gcd(g, e < 0 ? -e : e);
    if (g == 1) break;
  }
  if (coeffs_.empty()) g = den_;
  if (g <= 1) return *this;
  TermMap terms;
  for (const auto& [e, c] : coeffs_) terms[e / g] = c;
  return FracSeries(den_ / g, std::move(terms), trunc_);
}

bool FracSeries::operator==(const FracSeries& other) const {
  FracSeries a = canonical(), b = other.canonical();
  return a.den_ == b.den_ && a.trunc_ == b.trunc_ && a.coeffs_ == b.coeffs_;
}

bool FracSeries::agrees_with(const FracSeries& other) const {
  Rational bound = std::min(trunc_, other.trunc_);
  FracSeries d = sub(other);
  for (const auto& [e, c] : d.coeffs_)
    if (frac(e, d.den_) < bound) return false;
  return true;
}

std::string FracSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    os << (first ? "" : " + ") << c.get_str() << "*q^(" << frac(e, den_).get_str() << ")";
    first = false;
  }
  if (first) os << "0";
  os << " + O(q^" << trunc_.get_str() << ")";
  return os.str();
}

FracSeries operator+(const FracSeries& a, const FracSeries& b) { return a.add(b); }
FracSeries operator-(const FracSeries& a, const FracSeries& b) { return a.sub(b); }
FracSeries operator*(const FracSeries& a, const FracSeries& b) { return a.mul(b); }
FracSeries operator*(const Rational& c, const FracSeries& a) { return a.scale(c); }

}  // namespace slk
