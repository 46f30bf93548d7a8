#ifndef ADIABAT_ORACLE_HPP
#define ADIABAT_ORACLE_HPP

#include <string>

#include "adiabat/state.hpp"

namespace adiabat {

/// Total verdict of an accessibility oracle within a comparability class.
/// The oracle never abstains: the relation is reproducible, so the same
/// operands always produce the same answer.
enum class Decision { Precedes, NotPrecedes };

inline const char* to_string(Decision d) {
  return d == Decision::Precedes ? "precedes" : "not-precedes";
}

/// Ground-truth decision procedure for adiabatic accessibility. All
/// implementations are pure and safe for concurrent invocation.
///
/// Contract: decide(x, x) == Precedes for every valid x, and decide raises
/// ErrorKind::Class when the operands are not in one comparability class.
class AccessibilityOracle {
 public:
  virtual ~AccessibilityOracle() = default;

  virtual Decision decide(const CompoundState& x,
                          const CompoundState& y) const = 0;

  /// Key of the comparability class containing x.
  virtual std::string class_of(const CompoundState& x) const = 0;

  /// Stable identifier used in reports and error messages.
  virtual std::string id() const = 0;
};

}  // namespace adiabat

#endif  // ADIABAT_ORACLE_HPP
