#ifndef ADIABAT_MODELS_WATER_HPP
#define ADIABAT_MODELS_WATER_HPP

#include <string>

#include "adiabat/oracle.hpp"
#include "adiabat/sampler.hpp"
#include "adiabat/state.hpp"

namespace adiabat {

/// One-bar properties of water, handbook values. Specific heats in J/(kg K),
/// latent heats in J/kg, temperatures in K.
struct PhaseConstants {
  double c_ice = 2060.0;
  double c_liq = 4180.0;
  double c_vap = 1996.0;
  double L_fus = 334000.0;
  double T_fus = 273.15;
  double L_vap = 2260000.0;
  double T_vap = 373.15;
  // Modeled temperature window of the heating curve.
  double T_min = 173.15;
  double T_max = 473.15;

  // Specific thermal energy marks along the curve; h = 0 is ice at T_fus.
  double h_melt_hi() const { return L_fus; }
  double h_boil_lo() const { return L_fus + c_liq * (T_vap - T_fus); }
  double h_boil_hi() const { return h_boil_lo() + L_vap; }
  double h_min() const { return c_ice * (T_min - T_fus); }
  double h_max() const { return h_boil_hi() + c_vap * (T_max - T_vap); }
};

/// A mass of water somewhere on the one-bar heating curve, located by its
/// specific thermal energy h (J/kg relative to ice at 273.15 K).
struct WaterState {
  double mass = 0.0;  // kg
  double h = 0.0;     // J/kg

  /// Throws ErrorKind::Domain when mass <= 0 or h leaves the curve.
  void validate(const PhaseConstants& k) const;
};

/// Temperature at specific energy h along the curve.
double water_temperature(const PhaseConstants& k, double h);

/// Segment label at h: ice, melting, liquid, boiling or vapor.
std::string water_phase(const PhaseConstants& k, double h);

/// Specific entropy s(h) in J/(kg K): c ln(T/T_ref) on single-phase segments,
/// (delta h)/T on the two plateaus, zero at ice/273.15 K. The pressure-volume
/// work term along the one-bar curve is neglected, so dQ = dh throughout.
double water_entropy_per_kg(const PhaseConstants& k, double h);

/// Mass-extensive entropy of a water state, J/K.
double water_entropy(const PhaseConstants& k, const WaterState& w);

/// Entropy-sum criterion at equal total mass: Precedes iff total entropy of x
/// does not exceed that of y (ties precede). Mass mismatch is a class error.
Decision water_precedes(const PhaseConstants& k, const CompoundState& x,
                        const CompoundState& y);

/// Canonical system description: one coordinate H_J (total thermal energy,
/// extensive), amounts in kg.
const SystemSpec& water_system();

SimpleState make_water_state(double mass_kg, double h_per_kg);

WaterState water_of_part(const SimpleState& part);

class WaterOracle final : public AccessibilityOracle {
 public:
  explicit WaterOracle(PhaseConstants k = {}) : k_(k) {}

  Decision decide(const CompoundState& x,
                  const CompoundState& y) const override;
  std::string class_of(const CompoundState& x) const override;
  std::string id() const override { return "water"; }

  const PhaseConstants& constants() const { return k_; }

 private:
  PhaseConstants k_;
};

/// Unit-mass draws with h uniform over a subrange of the curve.
class WaterSampler final : public StateSampler {
 public:
  WaterSampler(PhaseConstants k, double h_lo, double h_hi);

  CompoundState sample(Rng& rng) const override;
  std::string domain_id() const override { return "water-one-bar"; }

 private:
  PhaseConstants k_;
  double h_lo_, h_hi_;
};

}  // namespace adiabat

#endif  // ADIABAT_MODELS_WATER_HPP
