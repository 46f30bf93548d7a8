#ifndef ADIABAT_METER_HPP
#define ADIABAT_METER_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "adiabat/oracle.hpp"
#include "adiabat/sampler.hpp"
#include "adiabat/state.hpp"

namespace adiabat {

/// A validated strict reference pair X0 < X1 in one comparability class,
/// assigning S(X0) = 0 and S(X1) = 1 unit. All other entropy values follow
/// from the lambda_max construction against these references.
struct EntropyMeter {
  const AccessibilityOracle* oracle = nullptr;
  CompoundState X0;
  CompoundState X1;
  double lambda_tol = 1e-9;
  double bracket_limit = 1048576.0;  // 2^20
};

/// Validates the pair and returns a meter. Error kinds tell the failure
/// modes apart: DegenerateReferences when both directions hold (equal
/// entropy), ReversedReferences when only X1 precedes X0, and
/// IncomparableReferences when neither direction holds.
EntropyMeter build_meter(const AccessibilityOracle& oracle, CompoundState x0,
                         CompoundState x1, double lambda_tol = 1e-9);

struct LambdaDetail {
  double value = 0.0;
  int bisect_iters = 0;
  int expansions = 0;       // bracket doublings outside [0, 1]
  long decide_calls = 0;
};

/// Largest lambda with ((1-lambda) X0, lambda X1) preceding X, located by
/// bisection after geometric bracket expansion; the answer is the final
/// bracket midpoint, so its error is at most lambda_tol / 2. For lambda
/// outside [0, 1] the predicate is read by role interchange: negatively
/// scaled parts move to the other side of the relation. X must carry the
/// references' amount; entropy() below handles other amounts.
LambdaDetail lambda_max_detail(const EntropyMeter& m, const CompoundState& x);
double lambda_max(const EntropyMeter& m, const CompoundState& x);

/// S(X) in meter units, extended additively beyond the reference amount:
/// a state carrying rho times the references' amount is measured against
/// rho-scaled references and the result is scaled back by rho. This is what
/// makes S add over compounds and scale with amount.
double entropy(const EntropyMeter& m, const CompoundState& x);

struct EntropyTable {
  struct Row {
    std::string state_id;
    CompoundState state;
    double entropy_units = 0.0;
  };
  std::vector<Row> rows;
  // meter metadata, recorded so tables are self-describing
  std::string oracle_id;
  double lambda_tol = 0.0;
  CompoundState X0;
  CompoundState X1;
};

EntropyTable build_table(
    const EntropyMeter& m,
    const std::vector<std::pair<std::string, CompoundState>>& states,
    bool parallel = false);

struct AdditivityReport {
  std::size_t samples = 0;
  double max_additivity_dev = 0.0;   // |S(X,X') - S(X) - S(X')|
  double max_extensivity_dev = 0.0;  // |S(f X) - f S(X)| over the factors
  double tolerance = 0.0;            // 3 * lambda_tol
  bool passed = true;
};

AdditivityReport additivity_check(
    const EntropyMeter& m, const StateSampler& sampler, std::size_t n,
    std::uint64_t seed, const std::vector<double>& factors = {0.25, 0.5, 2.0});

/// Least-squares map meter_units ~= slope * analytic + offset over a table.
/// Slope is positive whenever the fit succeeds; an all-equal analytic column
/// is a FitFailure error.
struct AffineFitReport {
  double slope = 0.0;
  double offset = 0.0;
  double max_abs_residual = 0.0;
};

AffineFitReport affine_match(
    const EntropyTable& table,
    const std::function<double(const CompoundState&)>& analytic);

}  // namespace adiabat

#endif  // ADIABAT_METER_HPP
