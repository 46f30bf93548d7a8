#include "adiabat/existence/feasibility.hpp"

#include <cmath>
#include <set>

#include "adiabat/errors.hpp"
#include "adiabat/existence/simplex.hpp"

namespace adiabat {

namespace {

// Weighted atom-coefficient vector of a state.
std::vector<double> state_coeffs(const FiniteRelation& rel,
                                 const RelationState& s) {
  std::vector<double> c(rel.atoms.size(), 0.0);
  for (const auto& p : s.parts) c[*rel.atom_index(p.atom)] += p.weight;
  return c;
}

bool same_class(const FiniteRelation& rel, const std::string& a,
                const std::string& b) {
  auto ca = rel.class_index(a);
  auto cb = rel.class_index(b);
  return ca && cb && *ca == *cb;
}

double state_value(const RelationState& s,
                   const std::map<std::string, double>& assignment) {
  double v = 0.0;
  for (const auto& p : s.parts) {
    auto it = assignment.find(p.atom);
    if (it == assignment.end()) {
      throw Error(ErrorKind::Domain,
                  "assignment misses atom '" + p.atom + "'");
    }
    v += p.weight * it->second;
  }
  return v;
}

}  // namespace

FeasibilityResult entropy_feasible(const FiniteRelation& rel, double margin) {
  rel.validate();
  if (!(margin > 0.0)) {
    throw Error(ErrorKind::Domain, "margin must be positive");
  }
  FeasibilityResult res;

  // Direct scan first: a same-class pair with both directions absent is the
  // minimal witness that no order embedding exists, and an absent self-loop
  // can never meet a positive margin.
  std::set<StateEdge> absent_set(rel.absent.begin(), rel.absent.end());
  for (const auto& e : rel.absent) {
    if (e.first == e.second) {
      res.feasible = false;
      res.certificate = "absent self-loop: (" + e.first + ", " + e.second +
                        ") needs S > S";
      return res;
    }
    if (e.first < e.second && absent_set.count({e.second, e.first}) &&
        same_class(rel, e.first, e.second)) {
      res.feasible = false;
      res.certificate = "both directions absent for the same-class pair (" +
                        e.first + ", " + e.second +
                        "): S(" + e.first + ") > S(" + e.second + ") and S(" +
                        e.second + ") > S(" + e.first + ") cannot both hold";
      return res;
    }
  }

  const std::size_t n = rel.atoms.size();
  const double bound = 1e6 * margin;
  lp::Problem prob;
  prob.vars = n;

  // Variables are shifted nonnegative: x' = S + B with S in [-B, B].
  auto add_row = [&](const std::vector<double>& coeffs, double rhs) {
    double coeff_sum = 0.0;
    double coeff_mag = 0.0;
    for (double c : coeffs) {
      coeff_sum += c;
      coeff_mag = std::max(coeff_mag, std::abs(c));
    }
    if (coeff_mag < 1e-15) return coeff_mag;  // vacuous row
    prob.rows.push_back(coeffs);
    prob.rhs.push_back(rhs + bound * coeff_sum);
    return coeff_mag;
  };

  for (const auto& e : rel.precedes) {
    if (e.first == e.second) continue;
    const auto& sx = rel.states[*rel.state_index(e.first)];
    const auto& sy = rel.states[*rel.state_index(e.second)];
    auto cx = state_coeffs(rel, sx);
    auto cy = state_coeffs(rel, sy);
    std::vector<double> diff(n);
    for (std::size_t k = 0; k < n; ++k) diff[k] = cx[k] - cy[k];
    add_row(diff, 0.0);  // S(X) - S(Y) <= 0
  }
  for (const auto& e : rel.absent) {
    if (!same_class(rel, e.first, e.second)) continue;
    const auto& sx = rel.states[*rel.state_index(e.first)];
    const auto& sy = rel.states[*rel.state_index(e.second)];
    auto cx = state_coeffs(rel, sx);
    auto cy = state_coeffs(rel, sy);
    std::vector<double> diff(n);
    for (std::size_t k = 0; k < n; ++k) diff[k] = cy[k] - cx[k];
    // S(Y) - S(X) <= -margin, i.e. S(X) >= S(Y) + margin
    if (add_row(diff, -margin) < 1e-15) {
      // Equal atom decompositions force S(X) = S(Y); the margin is hopeless.
      res.feasible = false;
      res.certificate = "absent edge (" + e.first + ", " + e.second +
                        ") joins states with one atom decomposition";
      return res;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<double> row(n, 0.0);
    row[k] = 1.0;
    prob.rows.push_back(row);
    prob.rhs.push_back(2.0 * bound);  // x' <= 2B
  }

  lp::Result sol = lp::feasible_point(prob);
  if (sol.status != lp::Status::Feasible) {
    res.feasible = false;
    res.certificate = "linear-program: no additive assignment at margin " +
                      std::to_string(margin);
    return res;
  }
  res.feasible = true;
  for (std::size_t k = 0; k < n; ++k) {
    res.assignment[rel.atoms[k].id] = sol.x[k] - bound;
  }
  res.certificate.clear();
  if (!verify_assignment(rel, res.assignment, margin)) {
    throw Error(ErrorKind::OracleViolation,
                "solver returned an assignment that fails verification");
  }
  return res;
}

bool verify_assignment(const FiniteRelation& rel,
                       const std::map<std::string, double>& assignment,
                       double margin, double slack) {
  rel.validate();
  for (const auto& e : rel.precedes) {
    double sx = state_value(rel.states[*rel.state_index(e.first)],
                            assignment);
    double sy = state_value(rel.states[*rel.state_index(e.second)],
                            assignment);
    if (!(sx <= sy + slack)) return false;
  }
  for (const auto& e : rel.absent) {
    if (!same_class(rel, e.first, e.second)) continue;
    double sx = state_value(rel.states[*rel.state_index(e.first)],
                            assignment);
    double sy = state_value(rel.states[*rel.state_index(e.second)],
                            assignment);
    if (!(sx >= sy + margin - slack)) return false;
  }
  return true;
}

}  // namespace adiabat
