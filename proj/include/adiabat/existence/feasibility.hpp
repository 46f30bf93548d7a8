#ifndef ADIABAT_EXISTENCE_FEASIBILITY_HPP
#define ADIABAT_EXISTENCE_FEASIBILITY_HPP

#include <map>
#include <string>

#include "adiabat/existence/relation.hpp"

namespace adiabat {

/// Verdict of the additive-entropy existence decision. When feasible, the
/// assignment maps every atom to an entropy value such that all precedes
/// edges hold with <= and all same-class absent edges hold with a strict
/// margin. When infeasible, the certificate either names a minimal
/// contradictory edge subset (direct scan) or identifies the failed linear
/// program.
struct FeasibilityResult {
  bool feasible = false;
  std::map<std::string, double> assignment;
  std::string certificate;
};

/// Decides whether the (transitively closed) relation admits an additive
/// entropy, as a linear feasibility problem with one variable per atom.
/// Strict "does not precede" constraints are realized with the margin;
/// variables are bounded in [-B, B] with B = 1e6 * margin. Absent edges
/// across different classes are informative only and impose no constraint.
FeasibilityResult entropy_feasible(const FiniteRelation& rel,
                                   double margin = 1.0);

/// Solver-independent check of an assignment: every precedes edge must
/// satisfy S(X) <= S(Y) + slack, every same-class absent edge
/// S(X) >= S(Y) + margin - slack. Missing atom values are a domain error.
bool verify_assignment(const FiniteRelation& rel,
                       const std::map<std::string, double>& assignment,
                       double margin, double slack = 1e-6);

}  // namespace adiabat

#endif  // ADIABAT_EXISTENCE_FEASIBILITY_HPP
