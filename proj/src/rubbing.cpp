#include "adiabat/models/rubbing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>

#include "adiabat/errors.hpp"
#include "adiabat/numeric.hpp"

namespace adiabat {

namespace {

void require_body(const SimpleState& x) {
  if (x.system != rubbing_system().id) {
    throw Error(ErrorKind::Class,
                "rubbing oracle got a state of system '" + x.system + "'");
  }
  if (x.coords.size() != 1) {
    throw Error(ErrorKind::Domain, "rubbing body has exactly one coord (U)");
  }
  if (!(x.amount > 0.0) || x.coords[0] < 0.0) {
    throw Error(ErrorKind::Domain,
                "rubbing body needs positive capacity and U >= 0");
  }
}

// Capacity-weighted clipped energy at threshold tau.
double clipped_energy(const CompoundState& x, double tau) {
  double g = 0.0;
  for (const auto& p : x.parts) {
    g += p.amount * std::min(p.coords[0] / p.amount, tau);
  }
  return g;
}

double total_energy(const CompoundState& x) {
  double e = 0.0;
  for (const auto& p : x.parts) e += p.coords[0];
  return e;
}

long grid_index(double value, double lo, double step, const char* what) {
  double raw = (value - lo) / step;
  long idx = std::lround(raw);
  if (std::abs(raw - static_cast<double>(idx)) > 1e-9) {
    throw Error(ErrorKind::Domain,
                std::string(what) + " is not aligned to the grid");
  }
  return idx;
}

}  // namespace

Decision rubbing_precedes(const TwoBodyState& x, const TwoBodyState& y) {
  bool componentwise = approx_le(x.U1, y.U1) && approx_le(x.U2, y.U2);
  bool via_mean = approx_le(0.5 * (x.U1 + x.U2), std::min(y.U1, y.U2));
  return (componentwise || via_mean) ? Decision::Precedes
                                     : Decision::NotPrecedes;
}

std::vector<TwoBodyState> rubbing_reachable_grid(const TwoBodyState& x,
                                                 double step,
                                                 const GridBox& box) {
  if (!(step > 0.0) || !(box.hi > box.lo)) {
    throw Error(ErrorKind::Domain, "need step > 0 and a nonempty box");
  }
  if (x.U1 < box.lo || x.U1 > box.hi || x.U2 < box.lo || x.U2 > box.hi) {
    throw Error(ErrorKind::Domain, "box too small to contain the start state");
  }
  long n = grid_index(box.hi, box.lo, step, "box edge") + 1;
  long i0 = grid_index(x.U1, box.lo, step, "U1");
  long j0 = grid_index(x.U2, box.lo, step, "U2");

  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  auto at = [n](long i, long j) { return static_cast<std::size_t>(i) * n + j; };
  std::deque<std::pair<long, long>> frontier{{i0, j0}};
  seen[at(i0, j0)] = 1;
  while (!frontier.empty()) {
    auto [i, j] = frontier.front();
    frontier.pop_front();
    auto push = [&](long a, long b) {
      if (a < n && b < n && !seen[at(a, b)]) {
        seen[at(a, b)] = 1;
        frontier.emplace_back(a, b);
      }
    };
    push(i + 1, j);  // rub body 1
    push(i, j + 1);  // rub body 2
    // Equilibrate only when the mean is a grid point; rounding the mean down
    // would destroy energy and overreach the continuous closure.
    if ((i + j) % 2 == 0) push((i + j) / 2, (i + j) / 2);
  }

  std::vector<TwoBodyState> out;
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      if (seen[at(i, j)]) {
        out.push_back(TwoBodyState{box.lo + static_cast<double>(i) * step,
                                   box.lo + static_cast<double>(j) * step,
                                   x.C});
      }
    }
  }
  return out;
}

const SystemSpec& rubbing_system() {
  static const SystemSpec spec{"rubbing-body", "incompressible solid", {"U_J"},
                               "kg", "rubbing"};
  return spec;
}

SimpleState make_body(double capacity, double u_joules) {
  return SimpleState{rubbing_system().id, capacity, {u_joules}};
}

CompoundState make_two_body(const TwoBodyState& x) {
  CompoundState c;
  c.parts = {make_body(x.C, x.U1), make_body(x.C, x.U2)};
  return c;
}

Decision RubbingOracle::decide(const CompoundState& x,
                               const CompoundState& y) const {
  x.validate();
  y.validate();
  for (const auto& p : x.parts) require_body(p);
  for (const auto& p : y.parts) require_body(p);
  if (!amounts_equal(x.total_amount(), y.total_amount())) {
    throw Error(ErrorKind::Class, "total heat capacity differs");
  }
  // G is piecewise linear in tau, so x G <= y G everywhere iff it holds at
  // every temperature breakpoint and in the tau -> infinity limit (total
  // energies).
  for (const auto& p : x.parts) {
    double tau = p.coords[0] / p.amount;
    if (!approx_le(clipped_energy(x, tau), clipped_energy(y, tau))) {
      return Decision::NotPrecedes;
    }
  }
  for (const auto& p : y.parts) {
    double tau = p.coords[0] / p.amount;
    if (!approx_le(clipped_energy(x, tau), clipped_energy(y, tau))) {
      return Decision::NotPrecedes;
    }
  }
  return approx_le(total_energy(x), total_energy(y)) ? Decision::Precedes
                                                     : Decision::NotPrecedes;
}

std::string RubbingOracle::class_of(const CompoundState& x) const {
  x.validate();
  for (const auto& p : x.parts) require_body(p);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x.total_amount());
  return std::string("rubbing:C=") + buf;
}

TwoBodySampler::TwoBodySampler(double u_lo, double u_hi)
    : u_lo_(u_lo), u_hi_(u_hi) {}

CompoundState TwoBodySampler::sample(Rng& rng) const {
  return make_two_body(
      TwoBodyState{rng.uniform(u_lo_, u_hi_), rng.uniform(u_lo_, u_hi_), 1.0});
}

}  // namespace adiabat
