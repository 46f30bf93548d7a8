#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "adiabat/derived/thermo.hpp"
#include "adiabat/errors.hpp"
#include "adiabat/models/rubbing.hpp"
#include "adiabat/models/water.hpp"

using namespace adiabat;

namespace {

EntropyFn gas_entropy_fn(const GasSpec& spec) {
  return [spec](const SimpleState& s) { return gas_entropy(spec, s); };
}

}  // namespace

TEST_CASE("temperature recovers U / (n Cv) for the gas") {
  GasSpec spec;
  auto fn = gas_entropy_fn(spec);
  // U = Cv * 300 at one mole is exactly 300 K
  auto x = make_gas_state(1.0, spec.Cv * 300.0, 1.0);
  CHECK(temperature(fn, x) == doctest::Approx(300.0).epsilon(1e-6));
  // explicit step
  CHECK(temperature(fn, x, 0.5) == doctest::Approx(300.0).epsilon(1e-6));
  // two moles double the energy at the same temperature
  auto y = make_gas_state(2.0, 2.0 * spec.Cv * 150.0, 3.0);
  CHECK(temperature(fn, y) == doctest::Approx(150.0).epsilon(1e-6));

  // water: plateau states report the transition temperature
  PhaseConstants k;
  EntropyFn wfn = [k](const SimpleState& s) {
    return water_entropy(k, water_of_part(s));
  };
  auto mid_melt = make_water_state(1.0, 167000.0);
  CHECK(temperature(wfn, mid_melt, 100.0) ==
        doctest::Approx(273.15).epsilon(1e-9));
  auto steam = make_water_state(1.0, 2.0e6);
  CHECK(temperature(wfn, steam, 100.0) ==
        doctest::Approx(373.15).epsilon(1e-9));
}

TEST_CASE("temperature guards its finite difference") {
  GasSpec spec;
  auto fn = gas_entropy_fn(spec);
  auto x = make_gas_state(1.0, 100.0, 1.0);
  // du as large as U walks out of the domain
  CHECK_THROWS_AS(temperature(fn, x, 100.0), Error);
  CHECK_THROWS_AS(temperature(fn, x, -1.0), Error);

  // a decreasing "entropy" is not a thermodynamic entropy
  EntropyFn falling = [](const SimpleState& s) { return -s.coords[0]; };
  try {
    temperature(falling, x);
    FAIL("expected NonMonotoneEntropy");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonMonotoneEntropy);
  }
}

TEST_CASE("gas entropy is concave over the sampling box") {
  GasSpec spec;
  GasBoxSampler sampler(1.0, 50.0, 400.0, 0.5, 4.0);
  auto report = concavity_check(
      [&spec](const SimpleState& s) { return gas_entropy(spec, s); }, sampler,
      500, 17, 1e-9);
  CHECK(report.triples_tested == 500u);
  CHECK(report.violations == 0u);
  CHECK(report.passed);
  CHECK(report.max_deficit <= 0.0);
}

TEST_CASE("a convex function is flagged with a positive deficit") {
  GasBoxSampler sampler(1.0, 50.0, 400.0, 0.5, 4.0);
  EntropyFn convex = [](const SimpleState& s) {
    return s.coords[0] * s.coords[0];
  };
  auto report = concavity_check(convex, sampler, 200, 17, 1e-9);
  CHECK(report.violations > 0u);
  CHECK_FALSE(report.passed);
  CHECK(report.max_deficit > 0.0);

  // determinism of the sampled triples
  auto again = concavity_check(convex, sampler, 200, 17, 1e-9);
  CHECK(again.violations == report.violations);
  CHECK(again.max_deficit == report.max_deficit);
}

TEST_CASE("segment integrals match the analytic entropy difference") {
  GasSpec spec;
  double cvln2 = spec.Cv * std::log(2.0);
  // constant volume, U doubles: delta S = Cv ln 2
  PathSpec seg;
  seg.vertices = {{100.0, 1.0}, {200.0, 1.0}};
  seg.steps_per_segment = 10000;
  CHECK(path_delta_s(spec, seg) == doctest::Approx(cvln2).epsilon(1e-6));

  // constant energy, V doubles: delta S = R ln 2
  PathSpec iso;
  iso.vertices = {{100.0, 1.0}, {100.0, 2.0}};
  CHECK(path_delta_s(spec, iso) ==
        doctest::Approx(spec.R * std::log(2.0)).epsilon(1e-6));

  // diagonal leg equals the analytic difference too
  PathSpec diag;
  diag.vertices = {{100.0, 1.0}, {321.0, 2.7}};
  double want = gas_entropy(spec, make_gas_state(1.0, 321.0, 2.7)) -
                gas_entropy(spec, make_gas_state(1.0, 100.0, 1.0));
  CHECK(path_delta_s(spec, diag) == doctest::Approx(want).epsilon(1e-6));
}

TEST_CASE("closed loops cancel and split paths agree") {
  GasSpec spec;
  PathSpec loop;
  loop.vertices = {
      {100.0, 1.0}, {200.0, 1.0}, {200.0, 2.0}, {100.0, 2.0}, {100.0, 1.0}};
  auto rep = path_delta_s_report(spec, loop);
  CHECK(rep.steps == 4L * loop.steps_per_segment);
  CHECK(rep.sum_segment_abs > 0.0);
  CHECK(std::abs(rep.delta_s) <= 1e-8 * rep.sum_segment_abs);

  // two different paths between the same endpoints
  PathSpec a;
  a.vertices = {{100.0, 1.0}, {200.0, 1.0}, {200.0, 2.0}};
  PathSpec b;
  b.vertices = {{100.0, 1.0}, {100.0, 2.0}, {200.0, 2.0}};
  double sa = path_delta_s(spec, a);
  double sb = path_delta_s(spec, b);
  CHECK(sa == doctest::Approx(sb).epsilon(1e-8));

  // amount scales the result linearly
  PathSpec two = a;
  two.amount = 2.0;
  CHECK(path_delta_s(spec, two) == doctest::Approx(2.0 * sa).epsilon(1e-9));
}

TEST_CASE("path validation") {
  GasSpec spec;
  PathSpec p;
  p.vertices = {{100.0, 1.0}};
  CHECK_THROWS_AS(path_delta_s(spec, p), Error);  // needs two vertices
  p.vertices = {{100.0, 1.0}, {-5.0, 1.0}};
  CHECK_THROWS_AS(path_delta_s(spec, p), Error);  // leaves the quadrant
  p.vertices = {{100.0, 1.0}, {200.0, 1.0}};
  p.steps_per_segment = 0;
  CHECK_THROWS_AS(path_delta_s(spec, p), Error);
}

TEST_CASE("irreversibility witness for the rubbing world") {
  RubbingOracle oracle;
  auto x = make_two_body({1.0, 1.0});
  auto y = irreversibility_witness(oracle, x);
  CHECK(oracle.decide(x, y) == Decision::Precedes);
  CHECK(oracle.decide(y, x) == Decision::NotPrecedes);
  // the witness keeps the class
  CHECK(oracle.class_of(y) == oracle.class_of(x));
}

TEST_CASE("irreversibility witness for the gas") {
  GasOracle oracle;
  auto x = CompoundState::of(make_gas_state(1.0, 100.0, 1.0));
  auto y = irreversibility_witness(oracle, x);
  CHECK(oracle.decide(x, y) == Decision::Precedes);
  CHECK(oracle.decide(y, x) == Decision::NotPrecedes);
}

TEST_CASE("search reports exhaustion when nothing irreversible turns up") {
  // a state at the very top of the water curve: every energy probe leaves
  // the modeled domain, so the ladder runs dry
  WaterOracle oracle;
  auto x = CompoundState::of(make_water_state(1.0, 3200000.0));
  try {
    irreversibility_witness(oracle, x);
    FAIL("expected ExhaustedSearch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ExhaustedSearch);
  }

  // degenerate search parameters are rejected up front
  GasOracle gas;
  auto g = CompoundState::of(make_gas_state(1.0, 100.0, 1.0));
  WitnessSearch s;
  s.max_energy_factor = 1.0;
  CHECK_THROWS_AS(irreversibility_witness(gas, g, s), Error);
}
