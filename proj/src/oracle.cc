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

#include "dprs/oracle.h"

#include <limits>

#include "dprs/errors.h"
#include "dprs/subproblem.h"

namespace dprs {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void RequireOptimal(const LpSolution& sol, const char* what) {
  if (sol.status == LpStatus::kInfeasible) {
    throw InfeasibleError(std::string(what) + ": LP is infeasible");
  }
  if (sol.status == LpStatus::kUnbounded) {
    throw UnboundedError(std::string(what) + ": LP is unbounded");
  }
}

void RequireValid(const Instance& inst) {
  const ValidationReport report = ValidateInstance(inst);
  if (!report.ok()) throw InvalidInputError(report.Summary());
}

}  // namespace

CentralizedSolution SolveCentralized(const Instance& inst,
                                     const LpOptions& options) {
  RequireValid(inst);
  const std::size_t m = inst.num_resources();
  const std::size_t K = inst.num_parties();
  // Column layout: [x_1 .. x_K | s_1 .. s_K].
  std::vector<std::size_t> x_off(K), s_off(K);
  std::size_t n = 0;
  for (std::size_t k = 0; k < K; ++k) {
    x_off[k] = n;
    n += inst.parties[k].num_vars();
  }
  for (std::size_t k = 0; k < K; ++k) {
    s_off[k] = n;
    n += m;
  }
  LpProblem lp;
  lp.sense = Sense::kMaximize;
  lp.objective.assign(n, 0.0);
  lp.lower.assign(n, -kInf);
  lp.upper.assign(n, kInf);
  lp.ineq = Matrix(0, n);
  lp.eq = Matrix(0, n);
  Vector row(n);
  for (std::size_t k = 0; k < K; ++k) {
    const PartyData& p = inst.parties[k];
    const std::size_t nk = p.num_vars();
    for (std::size_t j = 0; j < nk; ++j) lp.objective[x_off[k] + j] = p.utility[j];
    for (std::size_t i = 0; i < m; ++i) {
      lp.lower[s_off[k] + i] = 0.0;
      lp.upper[s_off[k] + i] = p.claim_bound[i];
    }
    for (std::size_t r = 0; r < p.constraints.rows(); ++r) {
      std::fill(row.begin(), row.end(), 0.0);
      for (std::size_t j = 0; j < nk; ++j) {
        row[x_off[k] + j] = p.constraints(r, j);
      }
      lp.ineq.AppendRow(row);
      lp.ineq_rhs.push_back(p.rhs[r]);
    }
    for (std::size_t i = 0; i < m; ++i) {
      std::fill(row.begin(), row.end(), 0.0);
      for (std::size_t j = 0; j < nk; ++j) row[x_off[k] + j] = p.usage(i, j);
      row[s_off[k] + i] = -1.0;
      lp.ineq.AppendRow(row);
      lp.ineq_rhs.push_back(0.0);
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    std::fill(row.begin(), row.end(), 0.0);
    for (std::size_t k = 0; k < K; ++k) row[s_off[k] + i] = 1.0;
    lp.eq.AppendRow(row);
    lp.eq_rhs.push_back(inst.capacity[i]);
  }

  const LpSolution sol = SolveLp(lp, options);
  RequireOptimal(sol, "centralized");
  CentralizedSolution out;
  out.value = sol.objective_value;
  out.pivots = sol.pivots;
  out.lambda = sol.dual_eq;
  for (std::size_t k = 0; k < K; ++k) {
    const auto xb = sol.x.begin() + static_cast<std::ptrdiff_t>(x_off[k]);
    out.x.emplace_back(
        xb, xb + static_cast<std::ptrdiff_t>(inst.parties[k].num_vars()));
    const auto sb = sol.x.begin() + static_cast<std::ptrdiff_t>(s_off[k]);
    out.s.emplace_back(sb, sb + static_cast<std::ptrdiff_t>(m));
  }
  return out;
}

DualLpSolution SolveDualLp(const Instance& inst, const LpOptions& options) {
  RequireValid(inst);
  const std::size_t m = inst.num_resources();
  const std::size_t K = inst.num_parties();
  // Column layout: [lambda | per party: alpha_k (m), beta_k (m_k), gamma_k (m)].
  std::vector<std::size_t> a_off(K), b_off(K), g_off(K);
  std::size_t n = m;
  for (std::size_t k = 0; k < K; ++k) {
    a_off[k] = n;
    n += m;
    b_off[k] = n;
    n += inst.parties[k].num_private();
    g_off[k] = n;
    n += m;
  }
  LpProblem lp;
  lp.sense = Sense::kMinimize;
  lp.objective.assign(n, 0.0);
  lp.lower.assign(n, 0.0);
  lp.upper.assign(n, kInf);
  for (std::size_t i = 0; i < m; ++i) {
    lp.objective[i] = inst.capacity[i];
    lp.lower[i] = -kInf;
  }
  lp.ineq = Matrix(0, n);
  lp.eq = Matrix(0, n);
  Vector row(n);
  for (std::size_t k = 0; k < K; ++k) {
    const PartyData& p = inst.parties[k];
    for (std::size_t r = 0; r < p.num_private(); ++r) {
      lp.objective[b_off[k] + r] = p.rhs[r];
    }
    for (std::size_t i = 0; i < m; ++i) {
      lp.objective[g_off[k] + i] = p.claim_bound[i];
    }
    // A_k' alpha_k + B_k' beta_k = u_k (x_k is free).
    for (std::size_t j = 0; j < p.num_vars(); ++j) {
      std::fill(row.begin(), row.end(), 0.0);
      for (std::size_t i = 0; i < m; ++i) row[a_off[k] + i] = p.usage(i, j);
      for (std::size_t r = 0; r < p.num_private(); ++r) {
        row[b_off[k] + r] = p.constraints(r, j);
      }
      lp.eq.AppendRow(row);
      lp.eq_rhs.push_back(p.utility[j]);
    }
    // -(lambda - alpha_k + gamma_k) <= 0.
    for (std::size_t i = 0; i < m; ++i) {
      std::fill(row.begin(), row.end(), 0.0);
      row[i] = -1.0;
      row[a_off[k] + i] = 1.0;
      row[g_off[k] + i] = -1.0;
      lp.ineq.AppendRow(row);
      lp.ineq_rhs.push_back(0.0);
    }
  }

  const LpSolution sol = SolveLp(lp, options);
  RequireOptimal(sol, "dual LP");
  DualLpSolution out;
  out.value = sol.objective_value;
  out.lambda.assign(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(m));
  auto slice = [&](std::size_t off, std::size_t len) {
    const auto b = sol.x.begin() + static_cast<std::ptrdiff_t>(off);
    return Vector(b, b + static_cast<std::ptrdiff_t>(len));
  };
  for (std::size_t k = 0; k < K; ++k) {
    out.alpha.push_back(slice(a_off[k], m));
    out.beta.push_back(slice(b_off[k], inst.parties[k].num_private()));
    out.gamma.push_back(slice(g_off[k], m));
  }
  return out;
}

CanonicalSolution SolveCanonical(const Instance& inst,
                                 const LpOptions& options) {
  RequireValid(inst);
  const std::size_t m = inst.num_resources();
  const std::size_t K = inst.num_parties();
  std::vector<std::size_t> x_off(K);
  std::size_t n = 0;
  for (std::size_t k = 0; k < K; ++k) {
    x_off[k] = n;
    n += inst.parties[k].num_vars();
  }
  LpProblem lp;
  lp.sense = Sense::kMaximize;
  lp.objective.assign(n, 0.0);
  lp.ineq = Matrix(0, n);
  Vector row(n);
  for (std::size_t k = 0; k < K; ++k) {
    const PartyData& p = inst.parties[k];
    for (std::size_t j = 0; j < p.num_vars(); ++j) {
      lp.objective[x_off[k] + j] = p.utility[j];
    }
    for (std::size_t r = 0; r < p.constraints.rows(); ++r) {
      std::fill(row.begin(), row.end(), 0.0);
      for (std::size_t j = 0; j < p.num_vars(); ++j) {
        row[x_off[k] + j] = p.constraints(r, j);
      }
      lp.ineq.AppendRow(row);
      lp.ineq_rhs.push_back(p.rhs[r]);
    }
  }
  const std::size_t first_shared = lp.ineq.rows();
  for (std::size_t i = 0; i < m; ++i) {
    std::fill(row.begin(), row.end(), 0.0);
    for (std::size_t k = 0; k < K; ++k) {
      for (std::size_t j = 0; j < inst.parties[k].num_vars(); ++j) {
        row[x_off[k] + j] = inst.parties[k].usage(i, j);
      }
    }
    lp.ineq.AppendRow(row);
    lp.ineq_rhs.push_back(inst.capacity[i]);
  }
  const LpSolution sol = SolveLp(lp, options);
  RequireOptimal(sol, "canonical");
  CanonicalSolution out;
  out.value = sol.objective_value;
  for (std::size_t k = 0; k < K; ++k) {
    const auto xb = sol.x.begin() + static_cast<std::ptrdiff_t>(x_off[k]);
    out.x.emplace_back(
        xb, xb + static_cast<std::ptrdiff_t>(inst.parties[k].num_vars()));
  }
  out.prices.assign(sol.dual_ineq.begin() +
                        static_cast<std::ptrdiff_t>(first_shared),
                    sol.dual_ineq.end());
  return out;
}

double DistanceM(std::span<const double> lambda0,
                 std::span<const double> lambda_star) {
  if (lambda0.size() != lambda_star.size()) {
    throw InvalidInputError("distance: length mismatch");
  }
  Vector diff(lambda0.size());
  for (std::size_t i = 0; i < diff.size(); ++i) {
    diff[i] = lambda0[i] - lambda_star[i];
  }
  return Norm2(diff);
}

double DualFunction(const Instance& inst, std::span<const double> lambda) {
  double value = Dot(inst.capacity, lambda);
  for (std::size_t k = 0; k < inst.num_parties(); ++k) {
    value += SolveSubproblem(inst.parties[k], lambda, k).g_value;
  }
  return value;
}

}  // namespace dprs
