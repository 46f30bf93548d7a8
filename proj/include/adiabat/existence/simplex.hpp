#ifndef ADIABAT_EXISTENCE_SIMPLEX_HPP
#define ADIABAT_EXISTENCE_SIMPLEX_HPP

#include <cstddef>
#include <vector>

namespace adiabat::lp {

/// Feasibility problem A x <= b over x >= 0, dense rows.
struct Problem {
  std::size_t vars = 0;
  std::vector<std::vector<double>> rows;  // each of length vars
  std::vector<double> rhs;
};

enum class Status { Feasible, Infeasible };

struct Result {
  Status status = Status::Infeasible;
  std::vector<double> x;          // a feasible point when status is Feasible
  double artificial_sum = 0.0;    // phase-1 objective at exit
};

/// Two-phase simplex, phase 1 only: minimizes the artificial sum under
/// Bland's anti-cycling rule and reads off a feasible point when that
/// minimum is (numerically) zero. Dense tableau; intended for problems up to
/// a few hundred variables.
Result feasible_point(const Problem& p);

}  // namespace adiabat::lp

#endif  // ADIABAT_EXISTENCE_SIMPLEX_HPP
