#pragma once

#include <stdexcept>
#include <string>

namespace slk {

// Requested data lies at or beyond the guaranteed truncation of a series,
// or a verification was asked to certify more coefficients than it has.
struct InsufficientPrecision : std::runtime_error {
  explicit InsufficientPrecision(const std::string& what) : std::runtime_error(what) {}
};

// A construction that must produce integral exponents produced a fractional one.
struct NonIntegralExponent : std::runtime_error {
  explicit NonIntegralExponent(const std::string& what) : std::runtime_error(what) {}
};

// Series evaluation hit its term cap without meeting the tolerance.
struct NoConvergence : std::runtime_error {
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

// A lattice vector projects to zero on the chosen positive line, which the
// hypergeometric series representation of the lift cannot handle.
struct DegeneratePoint : std::runtime_error {
  explicit DegeneratePoint(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace slk
