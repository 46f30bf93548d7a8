#include "adiabat/models/ideal_gas.hpp"

#include <cmath>
#include <cstdio>

#include "adiabat/errors.hpp"
#include "adiabat/numeric.hpp"

namespace adiabat {

namespace {

void require_gas_part(const SimpleState& x) {
  if (x.system != gas_system().id) {
    throw Error(ErrorKind::Class,
                "ideal-gas oracle got a state of system '" + x.system + "'");
  }
  if (x.coords.size() != 2) {
    throw Error(ErrorKind::Domain, "gas state needs exactly (U, V) coords");
  }
  if (!(x.amount > 0.0) || !(x.coords[0] > 0.0) || !(x.coords[1] > 0.0)) {
    throw Error(ErrorKind::Domain, "gas state needs positive n, U, V");
  }
}

std::string format_amount(double n) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", n);
  return buf;
}

}  // namespace

void GasSpec::validate() const {
  if (!(Cv > 0.0) || !(gamma > 1.0)) {
    throw Error(ErrorKind::Domain, "gas spec needs Cv > 0 and gamma > 1");
  }
  if (!approx_eq(gamma * Cv, Cv + R)) {
    throw Error(ErrorKind::Domain, "gas spec violates gamma Cv = Cv + R");
  }
}

const SystemSpec& gas_system() {
  static const SystemSpec spec{"ideal-gas", "monatomic gas", {"U_J", "V_m3"},
                               "mol", "ideal-gas"};
  return spec;
}

SimpleState make_gas_state(double moles, double u_joules, double v_m3) {
  return SimpleState{gas_system().id, moles, {u_joules, v_m3}};
}

double gas_adiabat_invariant(const GasSpec& spec, const SimpleState& x) {
  require_gas_part(x);
  double u = x.coords[0] / x.amount;
  double v = x.coords[1] / x.amount;
  return u * std::pow(v, spec.gamma - 1.0);
}

Decision gas_precedes(const GasSpec& spec, const SimpleState& x,
                      const SimpleState& y) {
  require_gas_part(x);
  require_gas_part(y);
  if (!amounts_equal(x.amount, y.amount)) {
    throw Error(ErrorKind::Class, "gas states of unequal amount");
  }
  return approx_le(gas_adiabat_invariant(spec, x),
                   gas_adiabat_invariant(spec, y))
             ? Decision::Precedes
             : Decision::NotPrecedes;
}

double gas_entropy(const GasSpec& spec, const SimpleState& x) {
  require_gas_part(x);
  double n = x.amount;
  double u = x.coords[0] / n;
  double v = x.coords[1] / n;
  return n * (spec.Cv * std::log(u) + spec.R * std::log(v) + spec.s0);
}

double gas_entropy(const GasSpec& spec, const CompoundState& x) {
  x.validate();
  double total = 0.0;
  for (const auto& part : x.parts) total += gas_entropy(spec, part);
  return total;
}

Decision compound_gas_precedes(const GasSpec& spec, const CompoundState& x,
                               const CompoundState& y) {
  if (!amounts_equal(x.total_amount(), y.total_amount())) {
    throw Error(ErrorKind::Class, "gas compounds of unequal total amount");
  }
  return approx_le(gas_entropy(spec, x), gas_entropy(spec, y))
             ? Decision::Precedes
             : Decision::NotPrecedes;
}

std::pair<SimpleState, SimpleState> thermal_equilibrate(const GasSpec& spec,
                                                        const SimpleState& a,
                                                        const SimpleState& b) {
  spec.validate();  // shared Cv cancels out of the final energy split
  require_gas_part(a);
  require_gas_part(b);
  double total_u = a.coords[0] + b.coords[0];
  // T_f = total U / (Cv (n_a + n_b)); computing b's share as the remainder
  // keeps the energy sum bit-exact.
  double ua = total_u * (a.amount / (a.amount + b.amount));
  SimpleState ra = a;
  SimpleState rb = b;
  ra.coords[0] = ua;
  rb.coords[0] = total_u - ua;
  return {ra, rb};
}

GasOracle::GasOracle(GasSpec spec) : spec_(spec) { spec_.validate(); }

Decision GasOracle::decide(const CompoundState& x,
                           const CompoundState& y) const {
  return compound_gas_precedes(spec_, x, y);
}

std::string GasOracle::class_of(const CompoundState& x) const {
  x.validate();
  for (const auto& part : x.parts) require_gas_part(part);
  return "ideal-gas:n=" + format_amount(x.total_amount());
}

GasBoxSampler::GasBoxSampler(double amount, double u_lo, double u_hi,
                             double v_lo, double v_hi)
    : amount_(amount), u_lo_(u_lo), u_hi_(u_hi), v_lo_(v_lo), v_hi_(v_hi) {}

CompoundState GasBoxSampler::sample(Rng& rng) const {
  return CompoundState::of(make_gas_state(amount_, rng.uniform(u_lo_, u_hi_),
                                          rng.uniform(v_lo_, v_hi_)));
}

}  // namespace adiabat
