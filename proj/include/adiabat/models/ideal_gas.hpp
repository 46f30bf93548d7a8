#ifndef ADIABAT_MODELS_IDEAL_GAS_HPP
#define ADIABAT_MODELS_IDEAL_GAS_HPP

#include <utility>

#include "adiabat/oracle.hpp"
#include "adiabat/sampler.hpp"
#include "adiabat/state.hpp"

namespace adiabat {

/// Ideal-gas constants. Defaults describe a monatomic gas: Cv = (3/2) R,
/// gamma = 5/3, zero entropy offset.
struct GasSpec {
  double R = 8.314;         // J/(mol K)
  double Cv = 1.5 * 8.314;  // J/(mol K)
  double gamma = 1.0 + 8.314 / (1.5 * 8.314);
  double s0 = 0.0;          // J/(mol K), additive offset per mole

  /// Throws ErrorKind::Domain unless Cv > 0, gamma > 1 and
  /// gamma * Cv == Cv + R within 1e-12 relative.
  void validate() const;
};

/// Canonical system description shared by gas states: coordinates (U_J, V_m3),
/// amounts in moles.
const SystemSpec& gas_system();

SimpleState make_gas_state(double moles, double u_joules, double v_m3);

/// Adiabat invariant (U/n) * (V/n)^(gamma-1) per unit amount. Accessibility
/// for a simple gas state is exactly "this never decreases".
double gas_adiabat_invariant(const GasSpec& spec, const SimpleState& x);

/// Forward closure of quasi-static adiabatic volume change plus rubbing:
/// Precedes iff the per-amount adiabat invariant does not decrease. Amounts
/// must match within the class tolerance (ErrorKind::Class otherwise).
Decision gas_precedes(const GasSpec& spec, const SimpleState& x,
                      const SimpleState& y);

/// Analytic ground truth S = n (Cv ln(U/n) + R ln(V/n) + s0) in J/K.
/// Throws ErrorKind::Domain for nonpositive U, V or amount.
double gas_entropy(const GasSpec& spec, const SimpleState& x);

/// Sum of gas_entropy over all parts.
double gas_entropy(const GasSpec& spec, const CompoundState& x);

/// Entropy-sum criterion for compounds: Precedes iff total entropy of x does
/// not exceed that of y (ties precede). Total amounts must match.
Decision compound_gas_precedes(const GasSpec& spec, const CompoundState& x,
                               const CompoundState& y);

/// Pure thermal contact at fixed volumes: total U conserved exactly, final
/// temperatures equal. Returns the two relaxed states in input order.
std::pair<SimpleState, SimpleState> thermal_equilibrate(const GasSpec& spec,
                                                        const SimpleState& a,
                                                        const SimpleState& b);

class GasOracle final : public AccessibilityOracle {
 public:
  explicit GasOracle(GasSpec spec = {});

  Decision decide(const CompoundState& x,
                  const CompoundState& y) const override;
  std::string class_of(const CompoundState& x) const override;
  std::string id() const override { return "ideal-gas"; }

  const GasSpec& spec() const { return spec_; }

 private:
  GasSpec spec_;
};

/// Uniform draws of single-part states at fixed amount inside a (U, V) box.
class GasBoxSampler final : public StateSampler {
 public:
  GasBoxSampler(double amount, double u_lo, double u_hi, double v_lo,
                double v_hi);

  CompoundState sample(Rng& rng) const override;
  std::string domain_id() const override { return "ideal-gas-box"; }

 private:
  double amount_, u_lo_, u_hi_, v_lo_, v_hi_;
};

}  // namespace adiabat

#endif  // ADIABAT_MODELS_IDEAL_GAS_HPP
