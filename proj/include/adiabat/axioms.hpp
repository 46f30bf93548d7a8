#ifndef ADIABAT_AXIOMS_HPP
#define ADIABAT_AXIOMS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "adiabat/oracle.hpp"
#include "adiabat/sampler.hpp"

namespace adiabat {

/// Verdict of one axiom over a batch of sampled instances. A witness is the
/// list of states of a violating instance; passed holds iff no witnesses.
struct AxiomReport {
  std::string axiom;
  std::size_t instances_tested = 0;
  std::vector<CompoundState> witnesses;
  bool passed = true;
  // Instance indices where the oracle raised; recorded, not counted as
  // violations. Replay any index via Rng::stream(seed, stream, index).
  std::vector<std::size_t> skipped;
  std::vector<std::size_t> witness_instances;
};

struct SuiteOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  // Finite surrogate for "arbitrarily small epsilon": a decreasing ladder
  // ending at the configured floor.
  std::vector<double> stability_ladder = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  std::vector<double> scaling_factors = {0.25, 0.5, 2.0, 3.0};
  // Attempts to orient a sampled pair into an accessible one before an
  // instance is counted as vacuous.
  int orient_retries = 8;
  bool parallel = false;
};

/// Runs the six accessibility axioms against an oracle:
/// reflexivity, transitivity, composition consistency, scaling invariance,
/// split/recombine, and stability. Returns one report per axiom, in that
/// order.
std::vector<AxiomReport> run_axiom_suite(const AccessibilityOracle& oracle,
                                         const StateSampler& sampler,
                                         const SuiteOptions& options);

/// Fraction of sampled same-class pairs with x ≺ y or y ≺ x; incomparable
/// pairs are recorded verbatim.
struct ComparisonReport {
  std::string comparability_class;
  std::size_t pairs_tested = 0;
  double comparable_fraction = 1.0;
  std::vector<std::pair<CompoundState, CompoundState>> incomparable_witnesses;
};

ComparisonReport check_comparison(const AccessibilityOracle& oracle,
                                  const StateSampler& class_sampler,
                                  std::size_t pairs, std::uint64_t seed,
                                  bool parallel = false);

}  // namespace adiabat

#endif  // ADIABAT_AXIOMS_HPP
