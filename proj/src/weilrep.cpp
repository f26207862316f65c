#include "slk/weilrep.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "slk/errors.hpp"

namespace slk::weilrep {

DiscriminantGroup::DiscriminantGroup(std::vector<Factor> factors) : factors_(std::move(factors)) {
  order_ = 1;
  for (const Factor& f : factors_) {
    if (f.d < 1 || (f.sign != 1 && f.sign != -1))
      throw std::invalid_argument("factor must be Z(+-d) with d >= 1");
    order_ *= static_cast<std::size_t>(2 * f.d);
  }
}

std::pair<int, int> DiscriminantGroup::signature() const {
  int r = 0, s = 0;
  for (const Factor& f : factors_) (f.sign > 0 ? r : s) += 1;
  return {r, s};
}

DiscriminantGroup::Element DiscriminantGroup::reduce(const Element& e) const {
  if (e.size() != factors_.size()) throw std::invalid_argument("element rank mismatch");
  Element out(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    long m = 2 * factors_[i].d;
    long r = e[i] % m;
    if (r < 0) r += m;
    out[i] = r;
  }
  return out;
}

std::size_t DiscriminantGroup::index_of(const Element& e) const {
  Element r = reduce(e);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < r.size(); ++i)
    idx = idx * static_cast<std::size_t>(2 * factors_[i].d) + static_cast<std::size_t>(r[i]);
  return idx;
}

DiscriminantGroup::Element DiscriminantGroup::element(std::size_t index) const {
  Element out(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    std::size_t m = static_cast<std::size_t>(2 * factors_[i].d);
    out[i] = static_cast<long>(index % m);
    index /= m;
  }
  if (index != 0) throw std::out_of_range("element index out of range");
  return out;
}

DiscriminantGroup::Element DiscriminantGroup::add(const Element& a, const Element& b) const {
  if (a.size() != b.size() || a.size() != factors_.size())
    throw std::invalid_argument("element rank mismatch");
  Element out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return reduce(out);
}

DiscriminantGroup::Element DiscriminantGroup::negate(const Element& a) const {
  Element out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return reduce(out);
}

Rational DiscriminantGroup::q_value(const Element& e) const {
  Element r = reduce(e);
  Rational q(0);
  for (std::size_t i = 0; i < r.size(); ++i)
    q += frac(factors_[i].sign * r[i] * r[i], 4 * factors_[i].d);
  return mod1(q);
}

Rational DiscriminantGroup::bilinear(const Element& a, const Element& b) const {
  return mod1(q_value(add(a, b)) - q_value(a) - q_value(b));
}

bool DiscriminantGroup::operator==(const DiscriminantGroup& other) const {
  if (factors_.size() != other.factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i].d != other.factors_[i].d || factors_[i].sign != other.factors_[i].sign)
      return false;
  return true;
}

VectorSeries::VectorSeries(DiscriminantGroup group, const Rational& trunc)
    : group_(std::move(group)), comps_(group_.order(), FracSeries::zero(trunc)), trunc_(trunc) {}

VectorSeries::VectorSeries(DiscriminantGroup group, std::vector<FracSeries> components)
    : group_(std::move(group)), comps_(std::move(components)), trunc_(0) {
  if (comps_.size() != group_.order())
    throw std::invalid_argument("component count must equal group order");
  normalize();
}

void VectorSeries::normalize() {
  if (comps_.empty()) {
    trunc_ = 0;
    return;
  }
  std::int64_t den = 1;
  trunc_ = comps_[0].trunc();
  for (const FracSeries& c : comps_) {
    den = std::lcm(den, c.canonical().exponent_den());
    trunc_ = std::min(trunc_, c.trunc());
  }
  for (FracSeries& c : comps_) {
    FracSeries t = c.truncated(trunc_).canonical();
    // Rebuild on the common exponent denominator.
    FracSeries::TermMap terms;
    std::int64_t f = den / t.exponent_den();
    for (const auto& [e, v] : t.terms()) terms[e * f] = v;
    c = FracSeries::from_terms(den, std::move(terms), trunc_);
  }
}

void VectorSeries::set_component(const DiscriminantGroup::Element& e, const FracSeries& s) {
  comps_.at(group_.index_of(e)) = s;
  normalize();
}

VectorSeries VectorSeries::add(const VectorSeries& other) const {
  if (!(group_ == other.group_)) throw std::invalid_argument("group mismatch in add");
  std::vector<FracSeries> comps;
  comps.reserve(comps_.size());
  for (std::size_t i = 0; i < comps_.size(); ++i) comps.push_back(comps_[i].add(other.comps_[i]));
  return VectorSeries(group_, std::move(comps));
}

VectorSeries VectorSeries::scale(const Rational& c) const {
  std::vector<FracSeries> comps;
  comps.reserve(comps_.size());
  for (const FracSeries& s : comps_) comps.push_back(s.scale(c));
  return VectorSeries(group_, std::move(comps));
}

VectorSeries VectorSeries::rescale_exponents(const Rational& c) const {
  std::vector<FracSeries> comps;
  comps.reserve(comps_.size());
  for (const FracSeries& s : comps_) comps.push_back(s.rescale_exponents(c));
  return VectorSeries(group_, std::move(comps));
}

VectorSeries VectorSeries::theta_derivative(unsigned r) const {
  std::vector<FracSeries> comps;
  comps.reserve(comps_.size());
  for (const FracSeries& s : comps_) comps.push_back(s.theta_derivative(r));
  return VectorSeries(group_, std::move(comps));
}

VectorSeries VectorSeries::with_group(const DiscriminantGroup& g) const {
  if (g.rank() != group_.rank()) throw std::invalid_argument("with_group: rank mismatch");
  for (std::size_t i = 0; i < g.rank(); ++i)
    if (g.factors()[i].d != group_.factors()[i].d)
      throw std::invalid_argument("with_group: cyclic factor shapes differ");
  return VectorSeries(g, comps_);
}

bool VectorSeries::operator==(const VectorSeries& other) const {
  if (!(group_ == other.group_)) return false;
  for (std::size_t i = 0; i < comps_.size(); ++i)
    if (comps_[i] != other.comps_[i]) return false;
  return true;
}

bool VectorSeries::agrees_with(const VectorSeries& other) const {
  if (!(group_ == other.group_)) return false;
  for (std::size_t i = 0; i < comps_.size(); ++i)
    if (!comps_[i].agrees_with(other.comps_[i])) return false;
  return true;
}

std::vector<Rational> rho_T_phases(const DiscriminantGroup& g) {
  std::vector<Rational> phases;
  phases.reserve(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) phases.push_back(g.q_value(g.element(i)));
  return phases;
}

namespace {

std::complex<double> unit_phase(const Rational& x) {
  double t = 2.0 * M_PI * to_double(x);
  return {std::cos(t), std::sin(t)};
}

}  // namespace

CMatrix rho_S_matrix(const DiscriminantGroup& g) {
  auto [r, s] = g.signature();
  Rational eighth(s - r, 8);
  double norm = 1.0 / std::sqrt(static_cast<double>(g.order()));
  std::size_t n = g.order();
  CMatrix m(n, std::vector<std::complex<double>>(n));
  for (std::size_t nu = 0; nu < n; ++nu) {
    auto e_nu = g.element(nu);
    for (std::size_t mu = 0; mu < n; ++mu) {
      auto e_mu = g.element(mu);
      m[nu][mu] = norm * unit_phase(mod1(eighth - g.bilinear(e_nu, e_mu)));
    }
  }
  return m;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  std::size_t n = a.size();
  CMatrix out(n, std::vector<std::complex<double>>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      std::complex<double> aik = a[i][k];
      for (std::size_t j = 0; j < n; ++j) out[i][j] += aik * b[k][j];
    }
  return out;
}

VectorSeries unary_theta(long d, const Rational& trunc) {
  if (d < 1) throw std::invalid_argument("unary_theta requires d >= 1");
  if (trunc <= 0) throw std::invalid_argument("unary_theta requires positive truncation");
  DiscriminantGroup group({Factor{d, +1}});
  std::vector<FracSeries> comps;
  comps.reserve(group.order());
  for (long r = 0; r < 2 * d; ++r) {
    FracSeries::TermMap terms;
    for (long n = r; frac(n * n, 4 * d) < trunc; n += 2 * d) terms[n * n] += 1;
    for (long n = r - 2 * d; frac(n * n, 4 * d) < trunc; n -= 2 * d) terms[n * n] += 1;
    comps.push_back(FracSeries::from_terms(4 * d, std::move(terms), trunc));
  }
  return VectorSeries(group, std::move(comps));
}

long sigma_involution(long d, long c, long x) {
  if (c < 1 || d % c != 0 || std::gcd(c, d / c) != 1)
    throw std::invalid_argument("sigma_c requires an exact divisor c || d");
  long m = 2 * d;
  long found = -1;
  for (long y = 0; y < m; ++y) {
    long a = (y + x) % (2 * c);              // y = -x mod 2c
    long b = (y - x) % (2 * (d / c));        // y = x mod 2d/c
    if (a < 0) a += 2 * c;
    if (b < 0) b += 2 * (d / c);
    if (a == 0 && b == 0) {
      if (found >= 0) throw std::logic_error("sigma_c not unique");
      found = y;
    }
  }
  if (found < 0) throw std::logic_error("sigma_c has no solution");
  return found;
}

VectorSeries atkin_lehner(const VectorSeries& v, long c) {
  const DiscriminantGroup& g = v.group();
  if (g.rank() != 1) throw std::invalid_argument("atkin_lehner expects a rank-1 group");
  long d = g.factors()[0].d;
  std::vector<FracSeries> comps;
  comps.reserve(g.order());
  for (long r = 0; r < 2 * d; ++r)
    comps.push_back(v.component(DiscriminantGroup::Element{sigma_involution(d, c, r)}));
  return VectorSeries(g, std::move(comps));
}

VectorSeries tensor(const VectorSeries& f, const VectorSeries& g) {
  std::vector<Factor> factors = f.group().factors();
  for (const Factor& x : g.group().factors()) factors.push_back(x);
  DiscriminantGroup product(std::move(factors));
  std::vector<FracSeries> comps;
  comps.reserve(product.order());
  for (std::size_t i = 0; i < f.group().order(); ++i)
    for (std::size_t j = 0; j < g.group().order(); ++j)
      comps.push_back(f.component(i).mul(g.component(j)));
  return VectorSeries(product, std::move(comps));
}

VectorSeries tensor_collapsed(const VectorSeries& f, const VectorSeries& g) {
  if (!(f.group() == g.group()))
    throw std::invalid_argument("tensor_collapsed requires a shared group");
  const DiscriminantGroup& grp = f.group();
  Rational trunc = std::min(f.trunc(), g.trunc());
  std::vector<FracSeries> comps(grp.order(), FracSeries::zero(trunc));
  for (std::size_t i = 0; i < grp.order(); ++i) {
    for (std::size_t k = 0; k < grp.order(); ++k) {
      std::size_t target = grp.index_of(grp.add(grp.element(i), grp.element(k)));
      comps[target] = comps[target].add(f.component(i).mul(g.component(k)));
    }
  }
  return VectorSeries(grp, std::move(comps));
}

SublatticeIndex SublatticeIndex::identity(const DiscriminantGroup& g) {
  SublatticeIndex idx{g, g, {}, {}};
  idx.to_L.resize(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) idx.to_L[i] = i;
  idx.L_mod_K = {g.index_of(g.zero())};
  return idx;
}

void SublatticeIndex::validate() const {
  if (to_L.size() != K_group.order()) throw std::invalid_argument("to_L size mismatch");
  // L/K must be a subgroup of K'/K contained in L'/K, mapping to 0 in L'/L.
  std::set<std::size_t> sub(L_mod_K.begin(), L_mod_K.end());
  if (sub.size() != L_mod_K.size()) throw std::invalid_argument("L/K has duplicates");
  if (!sub.count(K_group.index_of(K_group.zero()))) throw std::invalid_argument("L/K misses zero");
  std::size_t zero_L = L_group.index_of(L_group.zero());
  for (std::size_t a : L_mod_K) {
    if (to_L.at(a) != zero_L) throw std::invalid_argument("L/K must map to zero in L'/L");
    for (std::size_t b : L_mod_K) {
      std::size_t c = K_group.index_of(K_group.add(K_group.element(a), K_group.element(b)));
      if (!sub.count(c)) throw std::invalid_argument("L/K not closed under addition");
    }
  }
  // Classes of L'/K must partition into |L'/L| fibers of size |L/K| each,
  // and translating by L/K must preserve fibers.
  std::size_t in_dual = 0;
  std::vector<std::size_t> fiber_size(L_group.order(), 0);
  for (std::size_t i = 0; i < to_L.size(); ++i) {
    if (to_L[i] == npos) continue;
    ++in_dual;
    fiber_size.at(to_L[i]) += 1;
    for (std::size_t a : L_mod_K) {
      std::size_t j = K_group.index_of(K_group.add(K_group.element(i), K_group.element(a)));
      if (to_L.at(j) != to_L[i]) throw std::invalid_argument("L/K translation changes the fiber");
    }
  }
  if (in_dual != L_group.order() * L_mod_K.size())
    throw std::invalid_argument("|L'/K| must equal |L'/L| * |L/K|");
  for (std::size_t f : fiber_size)
    if (f != L_mod_K.size()) throw std::invalid_argument("uneven fiber over L'/L");
}

VectorSeries restrict_to_sublattice(const VectorSeries& f_on_L, const SublatticeIndex& idx) {
  idx.validate();
  if (!(f_on_L.group() == idx.L_group)) throw std::invalid_argument("series group must be L'/L");
  std::vector<FracSeries> comps;
  comps.reserve(idx.K_group.order());
  for (std::size_t i = 0; i < idx.K_group.order(); ++i) {
    if (idx.to_L[i] == SublatticeIndex::npos)
      comps.push_back(FracSeries::zero(f_on_L.trunc()));
    else
      comps.push_back(f_on_L.component(idx.to_L[i]));
  }
  return VectorSeries(idx.K_group, std::move(comps));
}

VectorSeries trace_to_superlattice(const VectorSeries& g_on_K, const SublatticeIndex& idx) {
  idx.validate();
  if (!(g_on_K.group() == idx.K_group)) throw std::invalid_argument("series group must be K'/K");
  std::vector<FracSeries> comps(idx.L_group.order(), FracSeries::zero(g_on_K.trunc()));
  std::vector<bool> done(idx.L_group.order(), false);
  for (std::size_t i = 0; i < idx.K_group.order(); ++i) {
    std::size_t target = idx.to_L[i];
    if (target == SublatticeIndex::npos || done[target]) continue;
    FracSeries sum = FracSeries::zero(g_on_K.trunc());
    for (std::size_t a : idx.L_mod_K) {
      std::size_t j = idx.K_group.index_of(idx.K_group.add(idx.K_group.element(i), idx.K_group.element(a)));
      sum = sum.add(g_on_K.component(j));
    }
    comps[target] = sum;
    done[target] = true;
  }
  return VectorSeries(idx.L_group, std::move(comps));
}

FracSeries pairing(const VectorSeries& f, const VectorSeries& g) {
  if (!(f.group() == g.group())) throw std::invalid_argument("pairing requires matching groups");
  FracSeries total = FracSeries::zero(std::min(f.trunc(), g.trunc()));
  for (std::size_t i = 0; i < f.group().order(); ++i)
    total = total.add(f.component(i).mul(g.component(i)));
  return total;
}

Rational pairing_CT(const VectorSeries& f, const VectorSeries& g) {
  return pairing(f, g).coefficient(Rational(0));
}

Rational serre_pairing(const VectorSeries& g, const VectorSeries& f) {
  if (!(f.group() == g.group())) throw std::invalid_argument("serre_pairing requires matching groups");
  Rational total(0);
  for (std::size_t i = 0; i < f.group().order(); ++i) {
    const FracSeries& fc = f.component(i);
    const FracSeries& gc = g.component(i);
    for (const auto& [e, c] : fc.terms()) {
      Rational exponent(e, fc.exponent_den());
      total += c * gc.coefficient(-exponent);
    }
  }
  return total;
}

}  // namespace slk::weilrep
