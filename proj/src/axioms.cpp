#include "adiabat/axioms.hpp"

#include <atomic>
#include <functional>
#include <optional>
#include <thread>

#include "adiabat/errors.hpp"

namespace adiabat {

namespace {

struct Outcome {
  bool violated = false;
  bool skipped = false;
  std::vector<CompoundState> states;
};

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  bool parallel) {
  if (!parallel || n < 64) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  unsigned workers = std::max(2u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        body(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

using InstanceFn = std::function<void(Rng&, Outcome&)>;

AxiomReport run_axiom(std::string name, std::uint64_t stream,
                      const SuiteOptions& opt, const InstanceFn& instance) {
  AxiomReport report;
  report.axiom = std::move(name);
  report.instances_tested = opt.samples;
  std::vector<Outcome> outcomes(opt.samples);
  parallel_for(
      opt.samples,
      [&](std::size_t i) {
        Rng rng = Rng::stream(opt.seed, stream, i);
        try {
          instance(rng, outcomes[i]);
        } catch (const Error&) {
          outcomes[i].skipped = true;
        }
      },
      opt.parallel);
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].skipped) {
      report.skipped.push_back(i);
    } else if (outcomes[i].violated) {
      report.witness_instances.push_back(i);
      for (auto& s : outcomes[i].states) report.witnesses.push_back(std::move(s));
    }
  }
  report.passed = report.witnesses.empty();
  return report;
}

// Orders a sampled pair so that first ≺ second, or returns nullopt when the
// draw stays incomparable after the configured retries.
std::optional<std::pair<CompoundState, CompoundState>> accessible_pair(
    const AccessibilityOracle& oracle, const StateSampler& sampler, Rng& rng,
    int retries) {
  for (int attempt = 0; attempt <= retries; ++attempt) {
    CompoundState a = sampler.sample(rng);
    CompoundState b = sampler.sample(rng);
    if (oracle.decide(a, b) == Decision::Precedes) return {{a, b}};
    if (oracle.decide(b, a) == Decision::Precedes) return {{b, a}};
  }
  return std::nullopt;
}

}  // namespace

std::vector<AxiomReport> run_axiom_suite(const AccessibilityOracle& oracle,
                                         const StateSampler& sampler,
                                         const SuiteOptions& opt) {
  std::vector<AxiomReport> reports;
  reports.reserve(6);

  reports.push_back(run_axiom("reflexivity", 0, opt, [&](Rng& rng, Outcome& out) {
    CompoundState x = sampler.sample(rng);
    if (oracle.decide(x, x) != Decision::Precedes) {
      out.violated = true;
      out.states = {x};
    }
  }));

  reports.push_back(
      run_axiom("transitivity", 1, opt, [&](Rng& rng, Outcome& out) {
        CompoundState x = sampler.sample(rng);
        CompoundState y = sampler.sample(rng);
        CompoundState z = sampler.sample(rng);
        if (oracle.decide(x, y) == Decision::Precedes &&
            oracle.decide(y, z) == Decision::Precedes &&
            oracle.decide(x, z) != Decision::Precedes) {
          out.violated = true;
          out.states = {x, y, z};
        }
      }));

  reports.push_back(
      run_axiom("composition_consistency", 2, opt, [&](Rng& rng, Outcome& out) {
        auto xy = accessible_pair(oracle, sampler, rng, opt.orient_retries);
        auto zw = accessible_pair(oracle, sampler, rng, opt.orient_retries);
        if (!xy || !zw) return;  // vacuous draw
        CompoundState left = compose(xy->first, zw->first);
        CompoundState right = compose(xy->second, zw->second);
        if (oracle.decide(left, right) != Decision::Precedes) {
          out.violated = true;
          out.states = {xy->first, xy->second, zw->first, zw->second};
        }
      }));

  reports.push_back(
      run_axiom("scaling_invariance", 3, opt, [&](Rng& rng, Outcome& out) {
        CompoundState x = sampler.sample(rng);
        CompoundState y = sampler.sample(rng);
        double lambda =
            opt.scaling_factors[rng.index(opt.scaling_factors.size())];
        Decision plain = oracle.decide(x, y);
        Decision scaled = oracle.decide(scale(x, lambda), scale(y, lambda));
        if (plain != scaled) {
          out.violated = true;
          out.states = {x, y};
        }
      }));

  reports.push_back(
      run_axiom("split_recombine", 4, opt, [&](Rng& rng, Outcome& out) {
        CompoundState x = sampler.sample(rng);
        double lambda = rng.uniform(0.02, 0.98);
        CompoundState split = compose(scale(x, 1.0 - lambda), scale(x, lambda));
        if (oracle.decide(x, split) != Decision::Precedes ||
            oracle.decide(split, x) != Decision::Precedes) {
          out.violated = true;
          out.states = {x, split};
        }
      }));

  reports.push_back(run_axiom("stability", 5, opt, [&](Rng& rng, Outcome& out) {
    CompoundState x = sampler.sample(rng);
    CompoundState y = sampler.sample(rng);
    // Perturbation pair oriented z ≺ w so that the premise is monotone in
    // epsilon: once it holds at some epsilon it holds at every larger one.
    auto zw = accessible_pair(oracle, sampler, rng, opt.orient_retries);
    if (!zw) return;
    for (double eps : opt.stability_ladder) {
      CompoundState lhs = compose(x, scale(zw->first, eps));
      CompoundState rhs = compose(y, scale(zw->second, eps));
      if (oracle.decide(lhs, rhs) != Decision::Precedes) return;  // premise gone
    }
    if (oracle.decide(x, y) != Decision::Precedes) {
      out.violated = true;
      out.states = {x, y, zw->first, zw->second};
    }
  }));

  return reports;
}

ComparisonReport check_comparison(const AccessibilityOracle& oracle,
                                  const StateSampler& sampler,
                                  std::size_t pairs, std::uint64_t seed,
                                  bool parallel) {
  ComparisonReport report;
  report.pairs_tested = pairs;
  struct PairOutcome {
    bool comparable = true;
    std::optional<std::pair<CompoundState, CompoundState>> witness;
  };
  std::vector<PairOutcome> outcomes(pairs);
  parallel_for(
      pairs,
      [&](std::size_t i) {
        Rng rng = Rng::stream(seed, 100, i);
        CompoundState x = sampler.sample(rng);
        CompoundState y = sampler.sample(rng);
        bool comparable = oracle.decide(x, y) == Decision::Precedes ||
                          oracle.decide(y, x) == Decision::Precedes;
        if (!comparable) {
          outcomes[i].comparable = false;
          outcomes[i].witness = {{x, y}};
        }
      },
      parallel);
  std::size_t comparable = 0;
  for (auto& o : outcomes) {
    if (o.comparable) {
      ++comparable;
    } else {
      report.incomparable_witnesses.push_back(std::move(*o.witness));
    }
  }
  report.comparable_fraction =
      pairs == 0 ? 1.0 : static_cast<double>(comparable) / pairs;
  {
    Rng rng = Rng::stream(seed, 100, 0);
    report.comparability_class = oracle.class_of(sampler.sample(rng));
  }
  return report;
}

}  // namespace adiabat
