#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slk/fracseries.hpp"

namespace slk::modspaces {

enum class Level { SL2, Gamma0_4 };

std::string level_name(Level level);

// Echelonized generator basis of M_k: theta^{2a} F^b (a + 2b = k) on
// Gamma0(4), E4^a E6^b (4a + 6b = k) on SL2(Z).
struct SpaceBasis {
  Level level;
  unsigned weight;
  std::vector<FracSeries> basis;                            // reduced row echelon
  std::vector<long> leading_exponents;                      // strictly increasing
  std::vector<std::pair<unsigned, unsigned>> provenance;    // generator exponents (a, b)
};

SpaceBasis basis_gamma0_4(unsigned k, const Rational& trunc);
SpaceBasis basis_sl2(unsigned k, const Rational& trunc);

// ceil(k * index / 12) with index 1 for SL2(Z) and 6 for Gamma0(4).
long sturm_bound(unsigned k, Level level);

struct MembershipResult {
  enum class Status { Member, NotMember, InsufficientPrecision };
  Status status;
  std::vector<Rational> combination;      // per basis element, valid when Member
  std::optional<Rational> first_failure;  // first exponent where matching breaks

  bool is_member() const { return status == Status::Member; }
};

// Solves for the unique candidate combination from the coefficients up to the
// Sturm bound, then insists the match continue through the full truncation.
// The series must have integral exponents and truncation of at least
// sturm_bound + margin.
MembershipResult membership(const FracSeries& series, const SpaceBasis& basis, long margin);

// Cusp-at-infinity certificate: membership holds, the constant term of the
// combination vanishes, and the combination involves only basis elements with
// leading exponent >= 1.
bool combination_is_cuspidal(const MembershipResult& result, const SpaceBasis& basis);

}  // namespace slk::modspaces
