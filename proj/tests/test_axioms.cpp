#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "adiabat/axioms.hpp"
#include "adiabat/errors.hpp"
#include "adiabat/models/ideal_gas.hpp"
#include "adiabat/models/rubbing.hpp"
#include "adiabat/models/water.hpp"
#include "adiabat/report_io.hpp"

using namespace adiabat;

namespace {

const std::vector<std::string> kAxiomOrder = {
    "reflexivity",       "transitivity",     "composition_consistency",
    "scaling_invariance", "split_recombine", "stability"};

// Answers NotPrecedes for everything, even x vs x.
class NeverOracle final : public AccessibilityOracle {
 public:
  Decision decide(const CompoundState&, const CompoundState&) const override {
    return Decision::NotPrecedes;
  }
  std::string class_of(const CompoundState&) const override { return "one"; }
  std::string id() const override { return "never"; }
};

// Raises on states above an energy cutoff, to exercise skip bookkeeping.
class PickyGasOracle final : public AccessibilityOracle {
 public:
  Decision decide(const CompoundState& x,
                  const CompoundState& y) const override {
    check(x);
    check(y);
    return inner_.decide(x, y);
  }
  std::string class_of(const CompoundState& x) const override {
    return inner_.class_of(x);
  }
  std::string id() const override { return "picky-gas"; }

 private:
  static void check(const CompoundState& c) {
    for (const auto& p : c.parts) {
      if (p.coords[0] / p.amount > 390.0) {
        throw Error(ErrorKind::Domain, "energy cutoff exceeded");
      }
    }
  }
  GasOracle inner_;
};

SuiteOptions quick(std::size_t n = 300, std::uint64_t seed = 0) {
  SuiteOptions opt;
  opt.samples = n;
  opt.seed = seed;
  return opt;
}

}  // namespace

TEST_CASE("gas oracle passes all six axioms") {
  GasOracle oracle;
  GasBoxSampler sampler(1.0, 50.0, 400.0, 0.5, 4.0);
  auto reports = run_axiom_suite(oracle, sampler, quick());
  REQUIRE(reports.size() == 6);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CAPTURE(reports[i].axiom);
    CHECK(reports[i].axiom == kAxiomOrder[i]);
    CHECK(reports[i].instances_tested == 300);
    CHECK(reports[i].passed);
    CHECK(reports[i].witnesses.empty());
  }
}

TEST_CASE("rubbing oracle passes all six axioms") {
  RubbingOracle oracle;
  TwoBodySampler sampler(0.0, 6.0);
  for (const auto& r : run_axiom_suite(oracle, sampler, quick())) {
    CAPTURE(r.axiom);
    CHECK(r.passed);
  }
}

TEST_CASE("water oracle passes all six axioms") {
  WaterOracle oracle;
  WaterSampler sampler(oracle.constants(), -200000.0, 3200000.0);
  for (const auto& r : run_axiom_suite(oracle, sampler, quick())) {
    CAPTURE(r.axiom);
    CHECK(r.passed);
  }
}

TEST_CASE("always-NotPrecedes oracle fails reflexivity with a witness") {
  NeverOracle oracle;
  GasBoxSampler sampler(1.0, 50.0, 400.0, 0.5, 4.0);
  auto reports = run_axiom_suite(oracle, sampler, quick(50));
  CHECK_FALSE(reports[0].passed);
  REQUIRE_FALSE(reports[0].witnesses.empty());
  CHECK(reports[0].witnesses.size() ==
        reports[0].witness_instances.size());
  // the witness is a sampled gas state, replayable from its instance index
  std::size_t idx = reports[0].witness_instances[0];
  Rng rng = Rng::stream(0, 0, idx);
  CHECK(multiset_equal(reports[0].witnesses[0], sampler.sample(rng)));
}

TEST_CASE("oracle errors are recorded as skips, not failures") {
  PickyGasOracle oracle;
  GasBoxSampler sampler(1.0, 50.0, 400.0, 0.5, 4.0);
  auto reports = run_axiom_suite(oracle, sampler, quick(200));
  std::size_t skipped = 0;
  for (const auto& r : reports) {
    CHECK(r.passed);  // throwing never counts as a violation
    skipped += r.skipped.size();
  }
  CHECK(skipped > 0);
}

TEST_CASE("suite reports are deterministic for a fixed seed") {
  GasOracle oracle;
  GasBoxSampler sampler(1.0, 50.0, 400.0, 0.5, 4.0);
  auto a = run_axiom_suite(oracle, sampler, quick(100, 9));
  auto b = run_axiom_suite(oracle, sampler, quick(100, 9));
  CHECK(suite_json(a).dump() == suite_json(b).dump());
  auto opt = quick(100, 9);
  opt.parallel = true;
  auto c = run_axiom_suite(oracle, sampler, opt);
  CHECK(suite_json(a).dump() == suite_json(c).dump());
}

TEST_CASE("comparison holds for the gas and fails for the rubbing world") {
  GasOracle gas;
  GasBoxSampler gas_sampler(1.0, 50.0, 400.0, 0.5, 4.0);
  auto gas_report = check_comparison(gas, gas_sampler, 2000, 0);
  CHECK(gas_report.pairs_tested == 2000);
  CHECK(gas_report.comparable_fraction == 1.0);
  CHECK(gas_report.incomparable_witnesses.empty());
  CHECK(gas_report.comparability_class == "ideal-gas:n=1");

  RubbingOracle rub;
  TwoBodySampler rub_sampler(0.0, 6.0);
  auto rub_report = check_comparison(rub, rub_sampler, 2000, 0);
  CHECK(rub_report.comparable_fraction < 1.0);
  CHECK_FALSE(rub_report.incomparable_witnesses.empty());
  // every witness really is incomparable
  for (const auto& [x, y] : rub_report.incomparable_witnesses) {
    CHECK(rub.decide(x, y) == Decision::NotPrecedes);
    CHECK(rub.decide(y, x) == Decision::NotPrecedes);
  }
}

TEST_CASE("a single repeated state is trivially comparable") {
  class OneStateSampler final : public StateSampler {
   public:
    CompoundState sample(Rng&) const override {
      return CompoundState::of(make_gas_state(1.0, 100.0, 1.0));
    }
    std::string domain_id() const override { return "constant"; }
  };
  GasOracle gas;
  OneStateSampler sampler;
  auto report = check_comparison(gas, sampler, 64, 0);
  CHECK(report.comparable_fraction == 1.0);
}

TEST_CASE("axiom report serialization has exactly the published fields") {
  NeverOracle oracle;
  GasBoxSampler sampler(1.0, 50.0, 400.0, 0.5, 4.0);
  auto reports = run_axiom_suite(oracle, sampler, quick(10));
  auto j = axiom_report_json(reports[0]);
  REQUIRE(j.size() == 4);
  CHECK(j.contains("axiom"));
  CHECK(j.contains("instances_tested"));
  CHECK(j.contains("passed"));
  CHECK(j.contains("witnesses"));
  REQUIRE(j["witnesses"].is_array());
  REQUIRE_FALSE(j["witnesses"].empty());
  const auto& encoded = j["witnesses"][0][0];
  REQUIRE(encoded.size() == 3);
  CHECK(encoded.contains("system"));
  CHECK(encoded.contains("amount"));
  CHECK(encoded.contains("coords"));
}
