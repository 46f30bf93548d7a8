#include "adiabat/meter.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "adiabat/errors.hpp"
#include "adiabat/numeric.hpp"

namespace adiabat {

namespace {

// The lambda_max predicate with the role-interchange reading for lambda
// outside [0, 1]. A scale factor of exactly zero drops its part, so the
// endpoints reproduce the pure references.
bool reference_mix_precedes(const AccessibilityOracle& oracle,
                            const CompoundState& x0, const CompoundState& x1,
                            const CompoundState& x, double lambda,
                            long& decide_calls) {
  ++decide_calls;
  if (lambda < 0.0) {
    return oracle.decide(scale(x0, 1.0 - lambda),
                         compose(x, scale(x1, -lambda))) == Decision::Precedes;
  }
  if (lambda == 0.0) return oracle.decide(x0, x) == Decision::Precedes;
  if (lambda < 1.0) {
    return oracle.decide(compose(scale(x0, 1.0 - lambda), scale(x1, lambda)),
                         x) == Decision::Precedes;
  }
  if (lambda == 1.0) return oracle.decide(x1, x) == Decision::Precedes;
  return oracle.decide(scale(x1, lambda),
                       compose(x, scale(x0, lambda - 1.0))) ==
         Decision::Precedes;
}

LambdaDetail locate(const EntropyMeter& m, const CompoundState& x0,
                    const CompoundState& x1, const CompoundState& x) {
  LambdaDetail d;
  auto pred = [&](double lam) {
    return reference_mix_precedes(*m.oracle, x0, x1, x, lam, d.decide_calls);
  };
  bool p0 = pred(0.0);
  bool p1 = pred(1.0);
  double lo, hi;
  if (p0 && !p1) {
    lo = 0.0;
    hi = 1.0;
  } else if (p1) {
    if (!p0) {
      // S(X) >= 1 but not >= 0: the predicate is not monotone.
      throw Error(ErrorKind::OracleViolation,
                  "oracle '" + m.oracle->id() +
                      "' answers non-monotonically at lambda 0 and 1");
    }
    lo = 1.0;
    hi = 2.0;
    while (pred(hi)) {
      lo = hi;
      hi *= 2.0;
      ++d.expansions;
      if (hi > m.bracket_limit) {
        throw Error(ErrorKind::UnboundedEntropy,
                    "no upper bracket below the bracket limit");
      }
    }
  } else {
    hi = 0.0;
    lo = -1.0;
    while (!pred(lo)) {
      hi = lo;
      lo *= 2.0;
      ++d.expansions;
      if (-lo > m.bracket_limit) {
        throw Error(ErrorKind::UnboundedEntropy,
                    "no lower bracket above the negative bracket limit");
      }
    }
  }
  while (hi - lo > m.lambda_tol) {
    double mid = 0.5 * (lo + hi);
    if (pred(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++d.bisect_iters;
  }
  d.value = 0.5 * (lo + hi);
  return d;
}

}  // namespace

EntropyMeter build_meter(const AccessibilityOracle& oracle, CompoundState x0,
                         CompoundState x1, double lambda_tol) {
  x0.validate();
  x1.validate();
  if (!(lambda_tol > 0.0)) {
    throw Error(ErrorKind::Domain, "lambda_tol must be positive");
  }
  bool fwd = oracle.decide(x0, x1) == Decision::Precedes;
  bool rev = oracle.decide(x1, x0) == Decision::Precedes;
  if (fwd && rev) {
    throw Error(ErrorKind::DegenerateReferences,
                "references have equal entropy");
  }
  if (rev) {
    throw Error(ErrorKind::ReversedReferences,
                "X1 strictly precedes X0; swap the references");
  }
  if (!fwd) {
    throw Error(ErrorKind::IncomparableReferences,
                "neither reference precedes the other");
  }
  return EntropyMeter{&oracle, std::move(x0), std::move(x1), lambda_tol,
                      1048576.0};
}

LambdaDetail lambda_max_detail(const EntropyMeter& m, const CompoundState& x) {
  x.validate();
  if (!amounts_equal(x.total_amount(), m.X0.total_amount())) {
    throw Error(ErrorKind::Class,
                "state amount differs from the references; use entropy()");
  }
  return locate(m, m.X0, m.X1, x);
}

double lambda_max(const EntropyMeter& m, const CompoundState& x) {
  return lambda_max_detail(m, x).value;
}

double entropy(const EntropyMeter& m, const CompoundState& x) {
  x.validate();
  double rho = x.total_amount() / m.X0.total_amount();
  if (amounts_equal(rho, 1.0)) return locate(m, m.X0, m.X1, x).value;
  return rho * locate(m, scale(m.X0, rho), scale(m.X1, rho), x).value;
}

EntropyTable build_table(
    const EntropyMeter& m,
    const std::vector<std::pair<std::string, CompoundState>>& states,
    bool parallel) {
  EntropyTable table;
  table.oracle_id = m.oracle->id();
  table.lambda_tol = m.lambda_tol;
  table.X0 = m.X0;
  table.X1 = m.X1;
  table.rows.resize(states.size());
  auto fill = [&](std::size_t i) {
    table.rows[i] =
        EntropyTable::Row{states[i].first, states[i].second,
                          entropy(m, states[i].second)};
  };
  if (!parallel || states.size() < 32) {
    for (std::size_t i = 0; i < states.size(); ++i) fill(i);
  } else {
    std::atomic<std::size_t> next{0};
    unsigned workers = std::max(2u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < states.size();
             i = next.fetch_add(1)) {
          fill(i);
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  return table;
}

AdditivityReport additivity_check(const EntropyMeter& m,
                                  const StateSampler& sampler, std::size_t n,
                                  std::uint64_t seed,
                                  const std::vector<double>& factors) {
  AdditivityReport report;
  report.samples = n;
  report.tolerance = 3.0 * m.lambda_tol;
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, 200, i);
    CompoundState x = sampler.sample(rng);
    CompoundState y = sampler.sample(rng);
    double sx = entropy(m, x);
    double sy = entropy(m, y);
    double sxy = entropy(m, compose(x, y));
    report.max_additivity_dev =
        std::max(report.max_additivity_dev, std::abs(sxy - sx - sy));
    for (double f : factors) {
      double dev = std::abs(entropy(m, scale(x, f)) - f * sx);
      report.max_extensivity_dev = std::max(report.max_extensivity_dev, dev);
    }
  }
  report.passed = report.max_additivity_dev <= report.tolerance &&
                  report.max_extensivity_dev <= report.tolerance;
  return report;
}

AffineFitReport affine_match(
    const EntropyTable& table,
    const std::function<double(const CompoundState&)>& analytic) {
  if (table.rows.size() < 3) {
    throw Error(ErrorKind::Domain, "affine fit needs at least 3 rows");
  }
  std::size_t n = table.rows.size();
  double mean_a = 0.0, mean_m = 0.0;
  std::vector<double> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = analytic(table.rows[i].state);
    mean_a += a[i];
    mean_m += table.rows[i].entropy_units;
  }
  mean_a /= static_cast<double>(n);
  mean_m /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0, scale_a = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double da = a[i] - mean_a;
    sxx += da * da;
    sxy += da * (table.rows[i].entropy_units - mean_m);
    scale_a = std::max(scale_a, std::abs(a[i]));
  }
  if (sxx <= 1e-24 * std::max(1.0, scale_a * scale_a)) {
    throw Error(ErrorKind::FitFailure,
                "analytic entropy is constant over the table");
  }
  AffineFitReport fit;
  fit.slope = sxy / sxx;
  fit.offset = mean_m - fit.slope * mean_a;
  for (std::size_t i = 0; i < n; ++i) {
    double residual =
        table.rows[i].entropy_units - (fit.slope * a[i] + fit.offset);
    fit.max_abs_residual = std::max(fit.max_abs_residual, std::abs(residual));
  }
  return fit;
}

}  // namespace adiabat
