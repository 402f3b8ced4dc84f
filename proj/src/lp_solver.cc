// Copyright 2026 The dprs Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dprs/lp_solver.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "dprs/errors.h"

namespace dprs {

const char* ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "Optimal";
    case LpStatus::kInfeasible:
      return "Infeasible";
    case LpStatus::kUnbounded:
      return "Unbounded";
  }
  return "Unknown";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPivotTol = 1e-9;

// How an original variable maps onto nonnegative tableau columns.
enum class ColumnKind { kShifted, kMirrored, kSplit };

struct ColumnMap {
  ColumnKind kind;
  std::size_t column;
  double offset;  // lower bound (kShifted) or upper bound (kMirrored)
};

struct Row {
  Vector coeffs;
  double rhs;
  bool equality;
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), width_(cols + 1),
        data_((rows + 1) * (cols + 1), 0.0), basis_(rows, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& at(std::size_t r, std::size_t c) { return data_[r * width_ + c]; }
  double at(std::size_t r, std::size_t c) const {
    return data_[r * width_ + c];
  }
  double& rhs(std::size_t r) { return at(r, cols_); }
  double rhs(std::size_t r) const { return at(r, cols_); }
  // Objective row holds reduced costs d_j = c_B B^-1 a_j - c_j.
  double& cost(std::size_t c) { return at(rows_, c); }
  double cost(std::size_t c) const { return at(rows_, c); }
  double objective() const { return at(rows_, cols_); }
  std::vector<std::size_t>& basis() { return basis_; }
  const std::vector<std::size_t>& basis() const { return basis_; }

  void Pivot(std::size_t pr, std::size_t pc) {
    double* prow = &data_[pr * width_];
    const double inv = 1.0 / prow[pc];
    nz_.clear();
    for (std::size_t c = 0; c < width_; ++c) {
      if (prow[c] != 0.0) {
        prow[c] *= inv;
        nz_.push_back(c);
      }
    }
    prow[pc] = 1.0;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      double* row = &data_[r * width_];
      const double f = row[pc];
      if (f == 0.0) continue;
      for (std::size_t c : nz_) row[c] -= f * prow[c];
      row[pc] = 0.0;
    }
    basis_[pr] = pc;
  }

  void Dump(std::ostream& os) const {
    for (std::size_t r = 0; r <= rows_; ++r) {
      os << (r < rows_ ? "  " : "z ");
      for (std::size_t c = 0; c < width_; ++c) os << ' ' << at(r, c);
      if (r < rows_) os << "  [basis " << basis_[r] << "]";
      os << '\n';
    }
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t width_;
  std::vector<double> data_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> nz_;
};

// Solves M z = b (or M' z = b) in place by partial-pivot elimination.
// M is R x R row-major. Returns false if M is numerically singular.
bool SolveDense(std::vector<double> M, Vector& b, std::size_t R,
                bool transpose) {
  if (transpose) {
    for (std::size_t i = 0; i < R; ++i) {
      for (std::size_t j = i + 1; j < R; ++j) {
        std::swap(M[i * R + j], M[j * R + i]);
      }
    }
  }
  for (std::size_t c = 0; c < R; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < R; ++r) {
      if (std::abs(M[r * R + c]) > std::abs(M[piv * R + c])) piv = r;
    }
    if (std::abs(M[piv * R + c]) < 1e-13) return false;
    if (piv != c) {
      for (std::size_t k = 0; k < R; ++k) {
        std::swap(M[c * R + k], M[piv * R + k]);
      }
      std::swap(b[c], b[piv]);
    }
    const double inv = 1.0 / M[c * R + c];
    for (std::size_t r = c + 1; r < R; ++r) {
      const double f = M[r * R + c] * inv;
      if (f == 0.0) continue;
      for (std::size_t k = c; k < R; ++k) M[r * R + k] -= f * M[c * R + k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t c = R; c-- > 0;) {
    double v = b[c];
    for (std::size_t k = c + 1; k < R; ++k) v -= M[c * R + k] * b[k];
    b[c] = v / M[c * R + c];
  }
  return true;
}

enum class PhaseResult { kOptimal, kUnbounded };

class SimplexDriver {
 public:
  SimplexDriver(Tableau& tab, std::size_t first_artificial,
                const LpOptions& options, std::size_t max_pivots,
                std::size_t bland_after)
      : tab_(tab), first_artificial_(first_artificial), options_(options),
        max_pivots_(max_pivots), bland_after_(bland_after) {}

  std::size_t pivots() const { return pivots_; }

  PhaseResult Run(double opt_tol) {
    std::size_t degenerate_streak = 0;
    while (true) {
      const bool bland =
          pivots_ >= bland_after_ ||
          degenerate_streak >= options_.degenerate_streak_for_bland;
      const std::size_t q = ChooseEntering(opt_tol, bland);
      if (q == kNone) return PhaseResult::kOptimal;
      const std::size_t r = ChooseLeaving(q, bland);
      if (r == kNone) return PhaseResult::kUnbounded;
      if (pivots_ >= max_pivots_) {
        throw NumericalFailure("simplex pivot limit reached");
      }
      degenerate_streak = tab_.rhs(r) <= kPivotTol ? degenerate_streak + 1 : 0;
      tab_.Pivot(r, q);
      ++pivots_;
      if (options_.debug) {
        *options_.debug << "pivot " << pivots_ << " row " << r << " col " << q
                        << (bland ? " (bland)" : "") << '\n';
        tab_.Dump(*options_.debug);
      }
    }
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::size_t ChooseEntering(double opt_tol, bool bland) const {
    std::size_t best = kNone;
    double best_value = -opt_tol;
    for (std::size_t c = 0; c < first_artificial_; ++c) {
      const double d = tab_.cost(c);
      if (bland) {
        if (d < -opt_tol) return c;
      } else if (d < best_value) {
        best_value = d;
        best = c;
      }
    }
    return best;
  }

  // Minimum ratio. Under Bland's rule ties go to the smallest basic column
  // index; otherwise a Harris pass takes the largest pivot among the rows
  // whose ratio is within the feasibility tolerance of the minimum.
  std::size_t ChooseLeaving(std::size_t q, bool bland) const {
    std::size_t best = kNone;
    if (bland) {
      double best_ratio = kInf;
      for (std::size_t r = 0; r < tab_.rows(); ++r) {
        const double a = tab_.at(r, q);
        if (a <= kPivotTol) continue;
        const double ratio = std::max(0.0, tab_.rhs(r)) / a;
        const double eps = 1e-12 * (1.0 + best_ratio);
        if (best == kNone || ratio < best_ratio - eps) {
          best = r;
          best_ratio = ratio;
        } else if (ratio <= best_ratio + eps &&
                   tab_.basis()[r] < tab_.basis()[best]) {
          best = r;
          best_ratio = std::min(best_ratio, ratio);
        }
      }
      return best;
    }
    double theta_max = kInf;
    for (std::size_t r = 0; r < tab_.rows(); ++r) {
      const double a = tab_.at(r, q);
      if (a <= kPivotTol) continue;
      theta_max = std::min(
          theta_max, (std::max(0.0, tab_.rhs(r)) + options_.tol_feas) / a);
    }
    double best_a = 0.0;
    for (std::size_t r = 0; r < tab_.rows(); ++r) {
      const double a = tab_.at(r, q);
      if (a <= kPivotTol) continue;
      if (std::max(0.0, tab_.rhs(r)) / a > theta_max) continue;
      if (a > best_a) {
        best_a = a;
        best = r;
      }
    }
    return best;
  }

  Tableau& tab_;
  std::size_t first_artificial_;
  const LpOptions& options_;
  std::size_t max_pivots_;
  std::size_t bland_after_;
  std::size_t pivots_ = 0;
};

void CheckDimensions(const LpProblem& p) {
  const std::size_t n = p.num_vars();
  auto bad = [](const char* msg) { throw InvalidInputError(msg); };
  if (p.ineq.rows() != p.ineq_rhs.size()) bad("LP: ineq rows != ineq_rhs");
  if (p.ineq.rows() > 0 && p.ineq.cols() != n) bad("LP: ineq cols != n");
  if (p.eq.rows() != p.eq_rhs.size()) bad("LP: eq rows != eq_rhs");
  if (p.eq.rows() > 0 && p.eq.cols() != n) bad("LP: eq cols != n");
  if (!p.lower.empty() && p.lower.size() != n) bad("LP: lower size != n");
  if (!p.upper.empty() && p.upper.size() != n) bad("LP: upper size != n");
  for (double c : p.objective) {
    if (!std::isfinite(c)) bad("LP: objective must be finite");
  }
  for (double h : p.ineq_rhs) {
    if (std::isnan(h)) bad("LP: NaN right-hand side");
  }
  for (double h : p.eq_rhs) {
    if (!std::isfinite(h)) bad("LP: eq right-hand side must be finite");
  }
}

double Lower(const LpProblem& p, std::size_t j) {
  return p.lower.empty() ? -kInf : p.lower[j];
}
double Upper(const LpProblem& p, std::size_t j) {
  return p.upper.empty() ? kInf : p.upper[j];
}

// Relative slack scale for a row value compared against its right-hand side.
double RowScale(std::span<const double> coeffs, std::span<const double> x,
                double rhs) {
  double s = 1.0 + std::abs(rhs);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    s += std::abs(coeffs[j] * x[j]);
  }
  return s;
}

// Raises NumericalFailure if an Optimal solution fails its certificate.
void Certify(const LpProblem& p, const LpSolution& sol,
             const LpOptions& options) {
  const std::size_t n = p.num_vars();
  const bool maximize = p.sense == Sense::kMaximize;
  auto fail = [](const std::string& what) {
    throw NumericalFailure("LP certificate failed: " + what);
  };
  double dual_scale = 1.0;
  for (double c : p.objective) dual_scale = std::max(dual_scale, std::abs(c));
  for (double y : sol.dual_ineq) dual_scale = std::max(dual_scale, std::abs(y));
  for (double y : sol.dual_eq) dual_scale = std::max(dual_scale, std::abs(y));
  const double tol = options.tol_feas;

  for (std::size_t i = 0; i < p.ineq.rows(); ++i) {
    const double lhs = Dot(p.ineq.row(i), sol.x);
    const double scale = RowScale(p.ineq.row(i), sol.x, p.ineq_rhs[i]);
    const double slack = p.ineq_rhs[i] - lhs;
    if (slack < -tol * scale) fail("inequality row infeasible");
    const double y = sol.dual_ineq[i];
    if ((maximize && y < -tol * dual_scale) ||
        (!maximize && y > tol * dual_scale)) {
      fail("inequality dual has wrong sign");
    }
    if (std::abs(y) * std::max(0.0, slack) > tol * scale * dual_scale) {
      std::ostringstream os;
      os << "complementary slackness (row " << i << ": dual " << y
         << ", slack " << slack << ")";
      fail(os.str());
    }
  }
  for (std::size_t i = 0; i < p.eq.rows(); ++i) {
    const double lhs = Dot(p.eq.row(i), sol.x);
    const double scale = RowScale(p.eq.row(i), sol.x, p.eq_rhs[i]);
    if (std::abs(p.eq_rhs[i] - lhs) > tol * scale) fail("equality row");
  }
  for (std::size_t j = 0; j < n; ++j) {
    const double lo = Lower(p, j), hi = Upper(p, j);
    const double scale = 1.0 + std::abs(sol.x[j]);
    if (sol.x[j] < lo - tol * scale || sol.x[j] > hi + tol * scale) {
      fail("variable bound");
    }
    const double bd = sol.dual_bound[j];
    if (std::abs(bd) <= tol * dual_scale) continue;
    // For a maximization, a positive bound multiplier belongs to the upper
    // bound; for a minimization, to the lower bound.
    const bool upper_side = (bd > 0) == maximize;
    const double bound = upper_side ? hi : lo;
    if (!std::isfinite(bound)) fail("reduced cost on an absent bound");
    if (std::abs(bd) * std::abs(sol.x[j] - bound) >
        tol * scale * dual_scale * 10.0) {
      std::ostringstream os;
      os << "complementary slackness (bound " << j << ": multiplier " << bd
         << ", distance " << std::abs(sol.x[j] - bound) << ")";
      fail(os.str());
    }
  }
  const double dual = DualObjective(p, sol);
  if (std::abs(sol.objective_value - dual) >
      options.tol_gap * (1.0 + std::abs(sol.objective_value))) {
    std::ostringstream os;
    os << "duality gap " << std::abs(sol.objective_value - dual);
    fail(os.str());
  }
}

}  // namespace

LpSolution SolveLp(const LpProblem& p, const LpOptions& options) {
  CheckDimensions(p);
  const std::size_t n = p.num_vars();
  const double sign = p.sense == Sense::kMaximize ? 1.0 : -1.0;

  // Map variables onto nonnegative columns.
  std::vector<ColumnMap> maps(n);
  std::size_t n_cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const double lo = Lower(p, j), hi = Upper(p, j);
    if (std::isfinite(lo)) {
      maps[j] = {ColumnKind::kShifted, n_cols++, lo};
    } else if (std::isfinite(hi)) {
      maps[j] = {ColumnKind::kMirrored, n_cols++, hi};
    } else {
      maps[j] = {ColumnKind::kSplit, n_cols, 0.0};
      n_cols += 2;
    }
  }

  std::vector<Row> rows;
  rows.reserve(p.ineq.rows() + p.eq.rows() + n);
  auto transform = [&](std::span<const double> coeffs, double rhs,
                       bool equality) {
    Row row{Vector(n_cols, 0.0), rhs, equality};
    for (std::size_t j = 0; j < n; ++j) {
      const double g = coeffs[j];
      if (g == 0.0) continue;
      const ColumnMap& cm = maps[j];
      switch (cm.kind) {
        case ColumnKind::kShifted:
          row.coeffs[cm.column] += g;
          row.rhs -= g * cm.offset;
          break;
        case ColumnKind::kMirrored:
          row.coeffs[cm.column] -= g;
          row.rhs -= g * cm.offset;
          break;
        case ColumnKind::kSplit:
          row.coeffs[cm.column] += g;
          row.coeffs[cm.column + 1] -= g;
          break;
      }
    }
    rows.push_back(std::move(row));
  };
  const std::size_t n_ineq = p.ineq.rows();
  const std::size_t n_eq = p.eq.rows();
  std::vector<std::size_t> ineq_row_of;  // skips rows with rhs = +inf
  ineq_row_of.reserve(n_ineq);
  for (std::size_t i = 0; i < n_ineq; ++i) {
    if (p.ineq_rhs[i] == kInf) {
      ineq_row_of.push_back(std::numeric_limits<std::size_t>::max());
      continue;
    }
    if (p.ineq_rhs[i] == -kInf) {
      LpSolution sol;
      sol.status = LpStatus::kInfeasible;
      return sol;
    }
    ineq_row_of.push_back(rows.size());
    transform(p.ineq.row(i), p.ineq_rhs[i], false);
  }
  const std::size_t first_eq_row = rows.size();
  for (std::size_t i = 0; i < n_eq; ++i) {
    transform(p.eq.row(i), p.eq_rhs[i], true);
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (maps[j].kind == ColumnKind::kShifted && std::isfinite(Upper(p, j))) {
      Row row{Vector(n_cols, 0.0), Upper(p, j) - maps[j].offset, false};
      row.coeffs[maps[j].column] = 1.0;
      rows.push_back(std::move(row));
    }
  }

  // Internal costs for the maximization of sign * obj.
  Vector cost(n_cols, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double c = sign * p.objective[j];
    switch (maps[j].kind) {
      case ColumnKind::kShifted:
        cost[maps[j].column] += c;
        break;
      case ColumnKind::kMirrored:
        cost[maps[j].column] -= c;
        break;
      case ColumnKind::kSplit:
        cost[maps[j].column] += c;
        cost[maps[j].column + 1] -= c;
        break;
    }
  }

  // Standard form: slack per inequality row, artificial per row whose
  // initial basis is not a slack.
  const std::size_t R = rows.size();
  std::size_t n_slack = 0, n_art = 0;
  std::vector<bool> negated(R, false);
  for (std::size_t r = 0; r < R; ++r) {
    negated[r] = rows[r].rhs < 0.0;
    if (!rows[r].equality) ++n_slack;
    if (rows[r].equality || negated[r]) ++n_art;
  }
  const std::size_t first_slack = n_cols;
  const std::size_t first_art = n_cols + n_slack;
  const std::size_t N = first_art + n_art;
  Tableau tab(R, N);
  std::vector<std::size_t> identity_col(R);
  {
    std::size_t slack = first_slack, art = first_art;
    for (std::size_t r = 0; r < R; ++r) {
      const double s = negated[r] ? -1.0 : 1.0;
      for (std::size_t c = 0; c < n_cols; ++c) {
        tab.at(r, c) = s * rows[r].coeffs[c];
      }
      tab.rhs(r) = s * rows[r].rhs;
      if (!rows[r].equality) tab.at(r, slack) = s;
      if (rows[r].equality || negated[r]) {
        tab.at(r, art) = 1.0;
        identity_col[r] = art;
        tab.basis()[r] = art++;
      } else {
        identity_col[r] = slack;
        tab.basis()[r] = slack;
      }
      if (!rows[r].equality) ++slack;
    }
  }
  const Tableau initial = tab;

  const std::size_t max_pivots =
      options.max_pivots ? options.max_pivots : 50 * (R + N);
  const std::size_t bland_after =
      options.bland_after ? options.bland_after : 10 * (R + N);
  SimplexDriver driver(tab, first_art, options, max_pivots, bland_after);

  double rhs_scale = 1.0;
  for (std::size_t r = 0; r < R; ++r) {
    rhs_scale = std::max(rhs_scale, std::abs(tab.rhs(r)));
  }

  // Phase 1: maximize -sum(artificials).
  if (n_art > 0) {
    for (std::size_t r = 0; r < R; ++r) {
      if (tab.basis()[r] < first_art) continue;
      for (std::size_t c = 0; c <= N; ++c) {
        if (c >= first_art && c < N) continue;
        tab.at(R, c) -= tab.at(r, c);
      }
    }
    driver.Run(1e-11);
    if (tab.objective() < -options.tol_feas * rhs_scale) {
      LpSolution sol;
      sol.status = LpStatus::kInfeasible;
      sol.pivots = driver.pivots();
      return sol;
    }
    // Drive zero-level artificials out of the basis where possible.
    for (std::size_t r = 0; r < R; ++r) {
      if (tab.basis()[r] < first_art) continue;
      std::size_t best = first_art;
      double best_abs = kPivotTol;
      for (std::size_t c = 0; c < first_art; ++c) {
        if (std::abs(tab.at(r, c)) > best_abs) {
          best_abs = std::abs(tab.at(r, c));
          best = c;
        }
      }
      if (best < first_art) tab.Pivot(r, best);
    }
  }

  // Phase 2 objective row: d_j = c_B B^-1 a_j - c_j.
  double cost_scale = 1.0;
  for (double c : cost) cost_scale = std::max(cost_scale, std::abs(c));
  for (std::size_t c = 0; c <= N; ++c) {
    double d = (c < n_cols) ? -cost[c] : 0.0;
    for (std::size_t r = 0; r < R; ++r) {
      const std::size_t b = tab.basis()[r];
      if (b < n_cols && cost[b] != 0.0) d += cost[b] * tab.at(r, c);
    }
    tab.at(R, c) = d;
  }
  for (std::size_t r = 0; r < R; ++r) tab.at(R, tab.basis()[r]) = 0.0;

  LpSolution sol;
  const PhaseResult result = driver.Run(1e-9 * cost_scale);
  sol.pivots = driver.pivots();
  if (result == PhaseResult::kUnbounded) {
    sol.status = LpStatus::kUnbounded;
    return sol;
  }
  sol.status = LpStatus::kOptimal;

  Vector basic_value(R), price(R);
  for (std::size_t r = 0; r < R; ++r) {
    basic_value[r] = tab.rhs(r);
    price[r] = tab.cost(identity_col[r]);
  }
  auto assemble = [&] {
    Vector y(n_cols, 0.0);
    for (std::size_t r = 0; r < R; ++r) {
      const std::size_t b = tab.basis()[r];
      if (b < n_cols) y[b] = std::max(0.0, basic_value[r]);
    }
    sol.x.assign(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      const ColumnMap& cm = maps[j];
      switch (cm.kind) {
        case ColumnKind::kShifted:
          sol.x[j] = cm.offset + y[cm.column];
          break;
        case ColumnKind::kMirrored:
          sol.x[j] = cm.offset - y[cm.column];
          break;
        case ColumnKind::kSplit:
          sol.x[j] = y[cm.column] - y[cm.column + 1];
          break;
      }
    }
    sol.objective_value = Dot(p.objective, sol.x);

    // Row duals of the internal maximization, mapped back to user sense.
    auto row_dual = [&](std::size_t r) {
      return sign * (negated[r] ? -price[r] : price[r]);
    };
    sol.dual_ineq.assign(n_ineq, 0.0);
    for (std::size_t i = 0; i < n_ineq; ++i) {
      if (ineq_row_of[i] < R) sol.dual_ineq[i] = row_dual(ineq_row_of[i]);
    }
    sol.dual_eq.assign(n_eq, 0.0);
    for (std::size_t i = 0; i < n_eq; ++i) {
      sol.dual_eq[i] = row_dual(first_eq_row + i);
    }
    // Remaining stationarity residual belongs to the active variable bounds.
    sol.dual_bound = p.objective;
    for (std::size_t i = 0; i < n_ineq; ++i) {
      const double yi = sol.dual_ineq[i];
      if (yi == 0.0) continue;
      auto row = p.ineq.row(i);
      for (std::size_t j = 0; j < n; ++j) sol.dual_bound[j] -= yi * row[j];
    }
    for (std::size_t i = 0; i < n_eq; ++i) {
      const double zi = sol.dual_eq[i];
      if (zi == 0.0) continue;
      auto row = p.eq.row(i);
      for (std::size_t j = 0; j < n; ++j) sol.dual_bound[j] -= zi * row[j];
    }
  };
  assemble();
  try {
    Certify(p, sol, options);
  } catch (const NumericalFailure&) {
    // The pivoted tableau drifts on long runs; recompute basic values and
    // row prices from the original rows with the final basis and retry.
    std::vector<double> B(R * R);
    for (std::size_t r = 0; r < R; ++r) {
      const std::size_t bc = tab.basis()[r];
      basic_value[r] = initial.rhs(r);
      price[r] = bc < n_cols ? cost[bc] : 0.0;
      for (std::size_t i = 0; i < R; ++i) B[i * R + r] = initial.at(i, bc);
    }
    if (!SolveDense(B, basic_value, R, false) ||
        !SolveDense(B, price, R, true)) {
      throw;
    }
    assemble();
    Certify(p, sol, options);
  }
  return sol;
}

LpDuals ExtractDuals(const LpSolution& solution) {
  if (solution.status != LpStatus::kOptimal) {
    throw std::logic_error(std::string("duals requested for a ") +
                           ToString(solution.status) + " LP");
  }
  return {solution.dual_ineq, solution.dual_eq};
}

double DualObjective(const LpProblem& p, const LpSolution& sol) {
  const bool maximize = p.sense == Sense::kMaximize;
  double v = 0.0;
  for (std::size_t i = 0; i < p.ineq_rhs.size(); ++i) {
    if (sol.dual_ineq[i] != 0.0) v += p.ineq_rhs[i] * sol.dual_ineq[i];
  }
  for (std::size_t i = 0; i < p.eq_rhs.size(); ++i) {
    v += p.eq_rhs[i] * sol.dual_eq[i];
  }
  for (std::size_t j = 0; j < p.num_vars(); ++j) {
    const double bd = sol.dual_bound[j];
    if (bd == 0.0) continue;
    const bool upper_side = (bd > 0) == maximize;
    const double bound = upper_side ? Upper(p, j) : Lower(p, j);
    // A tiny multiplier on an absent bound is roundoff; x is the best proxy.
    v += bd * (std::isfinite(bound) ? bound : sol.x[j]);
  }
  return v;
}

}  // namespace dprs
