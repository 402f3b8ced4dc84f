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

// Centralized ground truth. Sees every party's data; never part of the
// protocol.
//
// SolveCentralized solves the allotment form
//   Z_P = max  sum_k u_k' x_k
//         s.t. A_k x_k <= s_k,  B_k x_k <= b_k,  0 <= s_k <= s_bar_k,
//              sum_k s_k = c
// whose equality multipliers are lambda*. With s_bar_k = c this coincides
// with the canonical program (SolveCanonical).
//
// SolveDualLp solves the explicit dual
//   min  c'lambda + sum_k (b_k'beta_k + s_bar_k'gamma_k)
//   s.t. A_k'alpha_k + B_k'beta_k = u_k
//        lambda - alpha_k + gamma_k >= 0
//        alpha_k, beta_k, gamma_k >= 0,  lambda free.

#ifndef DPRS_ORACLE_H_
#define DPRS_ORACLE_H_

#include <span>
#include <vector>

#include "dprs/lp_solver.h"
#include "dprs/model.h"

namespace dprs {

struct CentralizedSolution {
  double value = 0.0;  // Z_P
  std::vector<Vector> x;
  std::vector<Vector> s;
  Vector lambda;  // multipliers of sum_k s_k = c
  std::size_t pivots = 0;
};

struct DualLpSolution {
  double value = 0.0;  // Z_D
  Vector lambda;
  std::vector<Vector> alpha;
  std::vector<Vector> beta;
  std::vector<Vector> gamma;
};

struct CanonicalSolution {
  double value = 0.0;
  std::vector<Vector> x;
  Vector prices;  // multipliers of sum_k A_k x_k <= c
};

// Throw InfeasibleError / UnboundedError when the LP has no optimum.
CentralizedSolution SolveCentralized(const Instance& inst,
                                     const LpOptions& options = {});
DualLpSolution SolveDualLp(const Instance& inst,
                           const LpOptions& options = {});
CanonicalSolution SolveCanonical(const Instance& inst,
                                 const LpOptions& options = {});

// ||lambda0 - lambda*||_2.
double DistanceM(std::span<const double> lambda0,
                 std::span<const double> lambda_star);

// D(lambda) = c'lambda + sum_k g(lambda; D_k).
double DualFunction(const Instance& inst, std::span<const double> lambda);

}  // namespace dprs

#endif  // DPRS_ORACLE_H_
