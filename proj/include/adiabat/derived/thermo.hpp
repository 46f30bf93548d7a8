#ifndef ADIABAT_DERIVED_THERMO_HPP
#define ADIABAT_DERIVED_THERMO_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "adiabat/models/ideal_gas.hpp"
#include "adiabat/oracle.hpp"
#include "adiabat/sampler.hpp"
#include "adiabat/state.hpp"

namespace adiabat {

using EntropyFn = std::function<double(const SimpleState&)>;

/// Absolute temperature from 1/T = dS/dU at fixed work coordinates, by a
/// central difference on the energy coordinate. du = 0 picks the default
/// 1e-4 * U. A nonpositive entropy difference is a NonMonotoneEntropy error.
/// When entropy_fn reports meter units instead of J/K, multiply the result
/// by the affine slope (units per J/K) to land back in kelvin.
double temperature(const EntropyFn& entropy_fn, const SimpleState& x,
                   double du = 0.0);

struct ConcavityReport {
  std::size_t triples_tested = 0;
  std::size_t violations = 0;
  double max_deficit = 0.0;  // worst amount by which the inequality failed
  bool passed = true;
};

/// Samples X, Z and a mixing weight, forms the convex combination Y of the
/// coordinates, and counts violations of S(Y) >= w S(X) + (1-w) S(Z) - tol.
ConcavityReport concavity_check(const EntropyFn& entropy_fn,
                                const StateSampler& sampler, std::size_t n,
                                std::uint64_t seed, double tol);

/// Polygonal integration path in the (U, V) quadrant at fixed amount.
struct PathSpec {
  std::vector<std::array<double, 2>> vertices;  // (U joules, V m^3)
  int steps_per_segment = 10000;
  double amount = 1.0;  // mol
};

struct LoopReport {
  double delta_s = 0.0;          // J/K
  long steps = 0;
  double max_segment_abs = 0.0;  // largest |segment contribution|
  double sum_segment_abs = 0.0;
};

/// Trapezoidal integral of (dU + P dV)/T along the path, with P and T from
/// the gas law: P = (gamma - 1) U / V, T = U / (n Cv). Exactness of dS makes
/// the result path independent up to the integration error.
LoopReport path_delta_s_report(const GasSpec& spec, const PathSpec& path);
double path_delta_s(const GasSpec& spec, const PathSpec& path);

struct WitnessSearch {
  double max_energy_factor = 2.0;
  int probes = 16;
};

/// Finds y with x < y strictly (forward yes, backward no) by scaling every
/// part's energy coordinate upward through a ladder of factors. Proves an
/// irreversible adiabatic change away from x exists; throws ExhaustedSearch
/// when the whole ladder stays mutually accessible or out of domain.
CompoundState irreversibility_witness(const AccessibilityOracle& oracle,
                                      const CompoundState& x,
                                      const WitnessSearch& search = {});

}  // namespace adiabat

#endif  // ADIABAT_DERIVED_THERMO_HPP
