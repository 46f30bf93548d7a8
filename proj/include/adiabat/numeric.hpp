#ifndef ADIABAT_NUMERIC_HPP
#define ADIABAT_NUMERIC_HPP

#include <algorithm>
#include <cmath>

namespace adiabat {

// Relative tolerance used by every oracle comparison. Ties resolve to
// Precedes: the accessibility boundary contains equal-entropy states, which
// must be reachable in both directions.
inline constexpr double kOracleRelTol = 1e-12;

/// a <= b up to a relative tolerance scaled by the larger magnitude.
inline bool approx_le(double a, double b, double rtol = kOracleRelTol) {
  return a <= b + rtol * std::max(std::abs(a), std::abs(b));
}

inline bool approx_eq(double a, double b, double rtol = kOracleRelTol) {
  return std::abs(a - b) <= rtol * std::max(std::abs(a), std::abs(b));
}

/// Amount (mole number / mass) equality at the class-check tolerance.
inline bool amounts_equal(double a, double b) { return approx_eq(a, b, 1e-12); }

}  // namespace adiabat

#endif  // ADIABAT_NUMERIC_HPP
