#pragma once

#include <string>
#include <vector>

namespace slk::selfcheck {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

// Independent-oracle suites:
//  - Hurwitz class numbers against plain reduced-form enumeration (n <= 2000)
//  - pentagonal-recurrence partitions against dynamic programming (n <= 500)
//  - series-route spt against partition enumeration (n <= 60)
//  - eta sum variant against the product (through q^50)
//  - the projection/min identity, exact, on 1000 pseudorandom (X, y)
//  - the trace identity Theta_L = (Theta_{P+N})^L through q^20
//  - rho_S unitarity and (ST)^3 = S^2 to 1e-12 for groups of order <= 48
std::vector<CheckResult> run_all();

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace slk::selfcheck
