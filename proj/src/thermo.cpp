#include "adiabat/derived/thermo.hpp"

#include <algorithm>
#include <cmath>

#include "adiabat/errors.hpp"

namespace adiabat {

double temperature(const EntropyFn& entropy_fn, const SimpleState& x,
                   double du) {
  if (x.coords.empty() || !(x.coords[0] > 0.0)) {
    throw Error(ErrorKind::Domain, "state needs a positive energy coordinate");
  }
  if (du == 0.0) du = 1e-4 * x.coords[0];
  if (!(du > 0.0) || du >= x.coords[0]) {
    throw Error(ErrorKind::Domain, "du must sit in (0, U)");
  }
  SimpleState hi = x;
  SimpleState lo = x;
  hi.coords[0] += du;
  lo.coords[0] -= du;
  double ds = entropy_fn(hi) - entropy_fn(lo);
  if (!(ds > 0.0)) {
    throw Error(ErrorKind::NonMonotoneEntropy,
                "entropy does not increase with energy here");
  }
  return 2.0 * du / ds;
}

ConcavityReport concavity_check(const EntropyFn& entropy_fn,
                                const StateSampler& sampler, std::size_t n,
                                std::uint64_t seed, double tol) {
  ConcavityReport report;
  report.triples_tested = n;
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, 300, i);
    SimpleState x = sampler.sample(rng).parts[0];
    SimpleState z = sampler.sample(rng).parts[0];
    double w = rng.uniform(0.05, 0.95);
    SimpleState y = x;
    for (std::size_t c = 0; c < y.coords.size(); ++c) {
      y.coords[c] = w * x.coords[c] + (1.0 - w) * z.coords[c];
    }
    double deficit =
        w * entropy_fn(x) + (1.0 - w) * entropy_fn(z) - entropy_fn(y);
    if (deficit > tol) {
      ++report.violations;
      report.max_deficit = std::max(report.max_deficit, deficit);
    }
  }
  report.passed = report.violations == 0;
  return report;
}

LoopReport path_delta_s_report(const GasSpec& spec, const PathSpec& path) {
  spec.validate();
  if (path.vertices.size() < 2) {
    throw Error(ErrorKind::Domain, "path needs at least two vertices");
  }
  if (path.steps_per_segment < 1 || !(path.amount > 0.0)) {
    throw Error(ErrorKind::Domain, "need steps >= 1 and positive amount");
  }
  double n = path.amount;
  auto weighted = [&](double u, double v, double du, double dv) {
    if (!(u > 0.0) || !(v > 0.0)) {
      throw Error(ErrorKind::Domain, "path leaves the positive quadrant");
    }
    double t = u / (n * spec.Cv);
    double p = (spec.gamma - 1.0) * u / v;
    return (du + p * dv) / t;
  };

  LoopReport report;
  for (std::size_t s = 0; s + 1 < path.vertices.size(); ++s) {
    auto [ua, va] = path.vertices[s];
    auto [ub, vb] = path.vertices[s + 1];
    int m = path.steps_per_segment;
    double du = (ub - ua) / m;
    double dv = (vb - va) / m;
    double prev = weighted(ua, va, du, dv);
    double seg = 0.0;
    for (int k = 1; k <= m; ++k) {
      double cur = weighted(ua + k * du, va + k * dv, du, dv);
      seg += 0.5 * (prev + cur);
      prev = cur;
    }
    report.delta_s += seg;
    report.steps += m;
    report.max_segment_abs = std::max(report.max_segment_abs, std::abs(seg));
    report.sum_segment_abs += std::abs(seg);
  }
  return report;
}

double path_delta_s(const GasSpec& spec, const PathSpec& path) {
  return path_delta_s_report(spec, path).delta_s;
}

CompoundState irreversibility_witness(const AccessibilityOracle& oracle,
                                      const CompoundState& x,
                                      const WitnessSearch& search) {
  x.validate();
  if (!(search.max_energy_factor > 1.0) || search.probes < 1) {
    throw Error(ErrorKind::Domain, "need factor > 1 and probes >= 1");
  }
  for (int k = 1; k <= search.probes; ++k) {
    double f = 1.0 + (search.max_energy_factor - 1.0) * k / search.probes;
    CompoundState y = x;
    for (auto& part : y.parts) part.coords[0] *= f;
    try {
      if (oracle.decide(x, y) == Decision::Precedes &&
          oracle.decide(y, x) == Decision::NotPrecedes) {
        return y;
      }
    } catch (const Error&) {
      // probe left the oracle's domain; try the next factor
    }
  }
  throw Error(ErrorKind::ExhaustedSearch,
              "no irreversible step found inside the energy ladder");
}

}  // namespace adiabat
