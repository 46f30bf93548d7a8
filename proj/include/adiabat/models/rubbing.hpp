#ifndef ADIABAT_MODELS_RUBBING_HPP
#define ADIABAT_MODELS_RUBBING_HPP

#include <vector>

#include "adiabat/oracle.hpp"
#include "adiabat/sampler.hpp"
#include "adiabat/state.hpp"

namespace adiabat {

/// Two identical incompressible bodies, described only by their energies.
/// C is the shared heat capacity, so temperature is U / C per body.
struct TwoBodyState {
  double U1 = 0.0;  // J
  double U2 = 0.0;  // J
  double C = 1.0;   // J/K
};

/// Closed form of the closure of {rub one body, thermally equilibrate}:
/// Precedes iff each body's energy can rise componentwise, or both bodies can
/// be brought to the common mean and rubbed up from there. Bodies are
/// distinguishable, so no sorting happens.
Decision rubbing_precedes(const TwoBodyState& x, const TwoBodyState& y);

struct GridBox {
  double lo = 0.0;
  double hi = 0.0;
};

/// Brute-force closure on a square grid: breadth-first search under
/// "rub one body by +step" and "equilibrate both to the mean" (the latter is
/// available exactly when the mean lands on the grid, so no energy is lost to
/// rounding). Validates rubbing_precedes on small instances.
std::vector<TwoBodyState> rubbing_reachable_grid(const TwoBodyState& x,
                                                 double step,
                                                 const GridBox& box);

/// Canonical system description for rubbing bodies: one coordinate U_J, the
/// amount is the body's heat capacity in units of C.
const SystemSpec& rubbing_system();

SimpleState make_body(double capacity, double u_joules);

CompoundState make_two_body(const TwoBodyState& x);

/// Oracle for arbitrary finite collections of bodies. x precedes y iff for
/// every temperature threshold tau the capacity-weighted clipped energy
///   G(tau) = sum_i c_i * min(t_i, tau),   t_i = U_i / c_i,
/// of x stays below that of y. G is invariant under equilibration and
/// splitting and rises under rubbing, which makes it the exact closure
/// criterion once bodies may also be cut; on two-body states it is implied by
/// (but weaker than) rubbing_precedes, and the incomparable pairs of that
/// world stay incomparable here.
class RubbingOracle final : public AccessibilityOracle {
 public:
  Decision decide(const CompoundState& x,
                  const CompoundState& y) const override;
  std::string class_of(const CompoundState& x) const override;
  std::string id() const override { return "rubbing"; }
};

/// Draws two-body compounds with unit capacities and energies in [u_lo, u_hi].
class TwoBodySampler final : public StateSampler {
 public:
  TwoBodySampler(double u_lo, double u_hi);

  CompoundState sample(Rng& rng) const override;
  std::string domain_id() const override { return "rubbing-two-body"; }

 private:
  double u_lo_, u_hi_;
};

}  // namespace adiabat

#endif  // ADIABAT_MODELS_RUBBING_HPP
