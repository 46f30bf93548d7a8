#include "adiabat/models/water.hpp"

#include <cmath>
#include <cstdio>

#include "adiabat/errors.hpp"
#include "adiabat/numeric.hpp"

namespace adiabat {

namespace {

void require_h(const PhaseConstants& k, double h) {
  if (h < k.h_min() || h > k.h_max()) {
    throw Error(ErrorKind::Domain, "h outside the modeled heating curve");
  }
}

void require_water_part(const SimpleState& x) {
  if (x.system != water_system().id) {
    throw Error(ErrorKind::Class,
                "water oracle got a state of system '" + x.system + "'");
  }
  if (x.coords.size() != 1) {
    throw Error(ErrorKind::Domain, "water state has exactly one coord (H)");
  }
  if (!(x.amount > 0.0)) {
    throw Error(ErrorKind::Domain, "water state needs positive mass");
  }
}

}  // namespace

void WaterState::validate(const PhaseConstants& k) const {
  if (!(mass > 0.0)) {
    throw Error(ErrorKind::Domain, "water state needs positive mass");
  }
  require_h(k, h);
}

double water_temperature(const PhaseConstants& k, double h) {
  require_h(k, h);
  if (h <= 0.0) return k.T_fus + h / k.c_ice;
  if (h < k.h_melt_hi()) return k.T_fus;
  if (h < k.h_boil_lo()) return k.T_fus + (h - k.L_fus) / k.c_liq;
  if (h < k.h_boil_hi()) return k.T_vap;
  return k.T_vap + (h - k.h_boil_hi()) / k.c_vap;
}

std::string water_phase(const PhaseConstants& k, double h) {
  require_h(k, h);
  if (h <= 0.0) return "ice";
  if (h < k.h_melt_hi()) return "melting";
  if (h < k.h_boil_lo()) return "liquid";
  if (h < k.h_boil_hi()) return "boiling";
  return "vapor";
}

double water_entropy_per_kg(const PhaseConstants& k, double h) {
  require_h(k, h);
  if (h <= 0.0) {
    return k.c_ice * std::log((k.T_fus + h / k.c_ice) / k.T_fus);
  }
  if (h < k.h_melt_hi()) return h / k.T_fus;
  double s = k.L_fus / k.T_fus;  // end of melting
  if (h < k.h_boil_lo()) {
    double t = k.T_fus + (h - k.L_fus) / k.c_liq;
    return s + k.c_liq * std::log(t / k.T_fus);
  }
  s += k.c_liq * std::log(k.T_vap / k.T_fus);  // liquid heated to T_vap
  if (h < k.h_boil_hi()) return s + (h - k.h_boil_lo()) / k.T_vap;
  s += k.L_vap / k.T_vap;  // end of boiling
  double t = k.T_vap + (h - k.h_boil_hi()) / k.c_vap;
  return s + k.c_vap * std::log(t / k.T_vap);
}

double water_entropy(const PhaseConstants& k, const WaterState& w) {
  w.validate(k);
  return w.mass * water_entropy_per_kg(k, w.h);
}

Decision water_precedes(const PhaseConstants& k, const CompoundState& x,
                        const CompoundState& y) {
  x.validate();
  y.validate();
  auto total = [&k](const CompoundState& c) {
    double s = 0.0;
    for (const auto& p : c.parts) {
      require_water_part(p);
      s += water_entropy(k, water_of_part(p));
    }
    return s;
  };
  if (!amounts_equal(x.total_amount(), y.total_amount())) {
    throw Error(ErrorKind::Class, "water compounds of unequal total mass");
  }
  return approx_le(total(x), total(y)) ? Decision::Precedes
                                       : Decision::NotPrecedes;
}

const SystemSpec& water_system() {
  static const SystemSpec spec{"water", "water", {"H_J"}, "kg", "water"};
  return spec;
}

SimpleState make_water_state(double mass_kg, double h_per_kg) {
  return SimpleState{water_system().id, mass_kg, {h_per_kg * mass_kg}};
}

WaterState water_of_part(const SimpleState& part) {
  require_water_part(part);
  return WaterState{part.amount, part.coords[0] / part.amount};
}

Decision WaterOracle::decide(const CompoundState& x,
                             const CompoundState& y) const {
  return water_precedes(k_, x, y);
}

std::string WaterOracle::class_of(const CompoundState& x) const {
  x.validate();
  for (const auto& p : x.parts) require_water_part(p);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x.total_amount());
  return std::string("water:kg=") + buf;
}

WaterSampler::WaterSampler(PhaseConstants k, double h_lo, double h_hi)
    : k_(k), h_lo_(h_lo), h_hi_(h_hi) {}

CompoundState WaterSampler::sample(Rng& rng) const {
  return CompoundState::of(make_water_state(1.0, rng.uniform(h_lo_, h_hi_)));
}

}  // namespace adiabat
