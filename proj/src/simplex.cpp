#include "adiabat/existence/simplex.hpp"

#include <algorithm>
#include <cmath>

#include "adiabat/errors.hpp"

namespace adiabat::lp {

namespace {

constexpr double kPivotEps = 1e-9;

}  // namespace

Result feasible_point(const Problem& p) {
  const std::size_t m = p.rows.size();
  const std::size_t n = p.vars;
  if (p.rhs.size() != m) {
    throw Error(ErrorKind::Domain, "simplex: rhs size mismatch");
  }
  for (const auto& row : p.rows) {
    if (row.size() != n) {
      throw Error(ErrorKind::Domain, "simplex: row width mismatch");
    }
  }

  // Columns: n structural, m slack/surplus, then one artificial per
  // negative-rhs row. Rows with nonnegative rhs start with their slack
  // basic; the others are sign-flipped and start with an artificial basic.
  std::size_t art = 0;
  for (double b : p.rhs) {
    if (b < 0.0) ++art;
  }
  const std::size_t cols = n + m + art;
  std::vector<std::vector<double>> t(m, std::vector<double>(cols + 1, 0.0));
  std::vector<std::size_t> basis(m);
  std::size_t next_art = n + m;
  for (std::size_t i = 0; i < m; ++i) {
    double sign = p.rhs[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = sign * p.rows[i][j];
    t[i][n + i] = sign;  // slack for sign +, surplus for sign -
    t[i][cols] = sign * p.rhs[i];
    if (sign < 0.0) {
      t[i][next_art] = 1.0;
      basis[i] = next_art++;
    } else {
      basis[i] = n + i;
    }
  }

  // Phase-1 objective: minimize the artificial sum. The objective row keeps
  // reduced costs; its rhs cell holds minus the current objective value.
  std::vector<double> obj(cols + 1, 0.0);
  for (std::size_t j = n + m; j < cols; ++j) obj[j] = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= n + m) {
      for (std::size_t j = 0; j <= cols; ++j) obj[j] -= t[i][j];
    }
  }

  double b_scale = 1.0;
  for (double b : p.rhs) b_scale = std::max(b_scale, std::abs(b));

  // Dantzig's rule is the fast path; after a long stall (degeneracy) the
  // pivot choice switches to Bland's rule, which cannot cycle.
  bool bland = false;
  int stall = 0;
  double last_value = -obj[cols];
  for (long iter = 0;; ++iter) {
    if (iter > 200000) {
      throw Error(ErrorKind::Domain, "simplex: iteration limit hit");
    }
    std::size_t enter = cols;
    if (bland) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (obj[j] < -kPivotEps) {
          enter = j;
          break;
        }
      }
    } else {
      double best = -kPivotEps;
      for (std::size_t j = 0; j < cols; ++j) {
        if (obj[j] < best) {
          best = obj[j];
          enter = j;
        }
      }
    }
    if (enter == cols) break;  // optimal

    std::size_t leave = m;
    double best_ratio = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= kPivotEps) continue;
      double ratio = t[i][cols] / t[i][enter];
      if (leave == m || ratio < best_ratio - 1e-15 ||
          (std::abs(ratio - best_ratio) <= 1e-15 &&
           basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) {
      // Phase 1 is bounded below by zero, so this is numerical failure.
      throw Error(ErrorKind::Domain, "simplex: lost boundedness in phase 1");
    }

    double pivot = t[leave][enter];
    for (std::size_t j = 0; j <= cols; ++j) t[leave][j] /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || std::abs(t[i][enter]) < 1e-14) continue;
      double f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    double f = obj[enter];
    if (std::abs(f) > 0.0) {
      for (std::size_t j = 0; j <= cols; ++j) obj[j] -= f * t[leave][j];
    }
    basis[leave] = enter;

    double value = -obj[cols];
    if (value < last_value - 1e-12 * std::max(1.0, b_scale)) {
      stall = 0;
      last_value = value;
    } else if (!bland && ++stall > 50) {
      bland = true;
    }
  }

  Result res;
  res.artificial_sum = -obj[cols];
  if (res.artificial_sum > 1e-7 * b_scale) {
    res.status = Status::Infeasible;
    return res;
  }
  res.status = Status::Feasible;
  res.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) res.x[basis[i]] = t[i][cols];
  }
  return res;
}

}  // namespace adiabat::lp
