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

// Dense two-phase primal simplex for
//   maximize / minimize  obj' x
//   s.t.  ineq x <= ineq_rhs,  eq x = eq_rhs,  lower <= x <= upper.
// Bounds may be infinite; empty bound vectors mean free variables. Finite
// upper bounds become explicit rows, finite lower bounds a column shift, and
// free variables are split into a difference of two nonnegative columns.
//
// Dual values are reported as sensitivities d(objective)/d(rhs). For a
// maximization this makes every inequality dual nonnegative; for a
// minimization, nonpositive. dual_bound holds the multiplier of whichever
// bound is active at x (zero for interior variables), so that
//   objective = ineq_rhs'dual_ineq + eq_rhs'dual_eq + sum_j active_j dual_bound_j.

#ifndef DPRS_LP_SOLVER_H_
#define DPRS_LP_SOLVER_H_

#include <cstddef>
#include <iosfwd>

#include "dprs/model.h"

namespace dprs {

enum class Sense { kMaximize, kMinimize };
enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* ToString(LpStatus status);

struct LpProblem {
  Sense sense = Sense::kMaximize;
  Vector objective;
  Matrix ineq;
  Vector ineq_rhs;
  Matrix eq;
  Vector eq_rhs;
  Vector lower;  // empty: all -inf
  Vector upper;  // empty: all +inf

  std::size_t num_vars() const { return objective.size(); }
};

struct LpOptions {
  double tol_feas = 1e-9;
  double tol_gap = 1e-7;
  // 0 selects 50 * (rows + cols) of the standard-form tableau.
  std::size_t max_pivots = 0;
  // Consecutive degenerate pivots tolerated before switching to Bland's rule.
  std::size_t degenerate_streak_for_bland = 50;
  // Total pivots after which Bland's rule is used unconditionally.
  // 0 selects 10 * (rows + cols).
  std::size_t bland_after = 0;
  // Tableau dump after every pivot when set.
  std::ostream* debug = nullptr;
};

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Vector x;
  double objective_value = 0.0;
  Vector dual_ineq;
  Vector dual_eq;
  Vector dual_bound;
  std::size_t pivots = 0;
};

struct LpDuals {
  Vector ineq;
  Vector eq;
};

// Throws InvalidInputError on inconsistent dimensions or non-finite
// objective, NumericalFailure when the pivot limit is hit or an Optimal
// result fails its primal/dual/gap certificate.
LpSolution SolveLp(const LpProblem& problem, const LpOptions& options = {});

// Throws std::logic_error unless the solution is Optimal.
LpDuals ExtractDuals(const LpSolution& solution);

// Value of the dual objective built from the reported multipliers.
double DualObjective(const LpProblem& problem, const LpSolution& solution);

}  // namespace dprs

#endif  // DPRS_LP_SOLVER_H_
