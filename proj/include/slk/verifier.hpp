#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "slk/fracseries.hpp"
#include "slk/modspaces.hpp"

namespace slk::verifier {

enum class Status { Verified, Failed, InsufficientPrecision };

std::string status_name(Status s);

struct Report {
  std::string identity;
  nlohmann::json params = nlohmann::json::object();
  Status status = Status::Verified;
  std::vector<Rational> combination;
  std::optional<Rational> first_failure;
  Rational truncation = Rational(0);
  long long elapsed_ms = 0;
  std::string normalization_notes;

  nlohmann::json to_json() const;
};

// c_j two ways: j! Gamma(1/2) / Gamma(1/2+j) via falling factorials (the
// sqrt(pi) of the definition cancels against Gamma(1/2)), and 4^j / C(2j,j).
Rational mertens_cj_gamma_route(unsigned j);
Rational mertens_cj_binom_route(unsigned j);

// C_j / pi two ways: 2^{2j+3} Gamma(1/2+j) Gamma(3/2+j) / (pi Gamma(2+2j))
// via falling factorials, and 4 C(2j,j) / 4^j.
Rational vector_Cj_over_pi_gamma_route(unsigned j);
Rational vector_Cj_over_pi_binom_route(unsigned j);

enum class MertensParity { Odd, EvenLiteral, EvenCorrected };

// c_j [H, theta]_j^parity plus the complementary divisor-power series.
// Odd adds sum lambda_{2j+1}(2n+1) q^{2n+1}.  EvenLiteral adds
// sum_{ab=4m} min(a,b)^{2j+1} q^{4m} as published; EvenCorrected adds the
// variant (1/2) sum_{ab=4m, a,b even} min(a,b)^{2j+1} q^{4m} that the
// special-point evaluation of the lift actually produces.
FracSeries mertens_series(unsigned j, const Rational& trunc, MertensParity parity);

enum class AkSign { PlusLiteral, MinusCorrected };

// G_{2j+2} +/- (24^j / C(2j,j)) [g, eta]_j with g carrying exponents
// (24n-1)/24 and eta the character sum; all assembled exponents are integral.
FracSeries ahlgren_kim_series(unsigned j, const Rational& trunc, AkSign sign);

// The four series c_g((t,r), .) of the signature (1,1) component formula at
// the special point y = (1,1), exponents in (1/4)Z:
//   4^j c_j [sum_{n=-t^2(4)} H(n) q^{n/4}, sum_{n=r(2)} q^{n^2/4}]_j
//   + (1/2) sum over ab = m, a = b mod 2, ((a-b)/2, (a+b)/2) = (t, r) mod 2
//     of min(a,b)^{2j+1} q^{m/4}.
struct VectorComponents {
  FracSeries comp[2][2];
};
VectorComponents vector_components(unsigned j, const Rational& quarter_trunc);

// Sum of the odd components (1,0) + (0,1) or even components (0,0) + (1,1),
// with exponents rescaled by 4 to land on integral powers of q.
FracSeries vector_reduction(const VectorComponents& c, bool odd);

Report verify_classical(long t_max);
Report verify_mertens(unsigned j, std::optional<long> terms, MertensParity parity);
Report verify_vector_identity(unsigned j, std::optional<long> terms);
Report verify_ahlgren_kim(unsigned j, std::optional<long> terms, AkSign sign);

long default_terms(unsigned weight, modspaces::Level level);
long default_margin(unsigned weight, modspaces::Level level);

}  // namespace slk::verifier
