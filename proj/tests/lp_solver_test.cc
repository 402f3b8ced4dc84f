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

#include <cmath>
#include <limits>
#include <sstream>

#include "doctest.h"
#include "dprs/errors.h"
#include "dprs/lp_solver.h"
#include "dprs/rng.h"
#include "support/brute_force.h"

namespace dprs {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

LpProblem Max2d() {
  // max 3x + 5y; x <= 4, 2y <= 12, 3x + 2y <= 18, x, y >= 0. Optimum 36 at (2, 6).
  LpProblem lp;
  lp.objective = {3, 5};
  lp.ineq = Matrix::FromRows({{1, 0}, {0, 2}, {3, 2}}, 2);
  lp.ineq_rhs = {4, 12, 18};
  lp.lower = {0, 0};
  lp.upper = {kInf, kInf};
  return lp;
}

TEST_CASE("textbook maximization") {
  const LpSolution sol = SolveLp(Max2d());
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.objective_value == doctest::Approx(36));
  CHECK(sol.x[0] == doctest::Approx(2));
  CHECK(sol.x[1] == doctest::Approx(6));
  // Shadow prices (0, 1.5, 1).
  CHECK(sol.dual_ineq[0] == doctest::Approx(0).epsilon(1e-12));
  CHECK(sol.dual_ineq[1] == doctest::Approx(1.5));
  CHECK(sol.dual_ineq[2] == doctest::Approx(1));
  CHECK(DualObjective(Max2d(), sol) == doctest::Approx(36));
}

TEST_CASE("minimization with >= rows written as <=") {
  // min 2x + 3y; x + y >= 4, x + 3y >= 6, x, y >= 0. Optimum 9 at (3, 1).
  LpProblem lp;
  lp.sense = Sense::kMinimize;
  lp.objective = {2, 3};
  lp.ineq = Matrix::FromRows({{-1, -1}, {-1, -3}}, 2);
  lp.ineq_rhs = {-4, -6};
  lp.lower = {0, 0};
  lp.upper = {kInf, kInf};
  const LpSolution sol = SolveLp(lp);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.objective_value == doctest::Approx(9));
  CHECK(sol.x[0] == doctest::Approx(3));
  CHECK(sol.x[1] == doctest::Approx(1));
  for (double d : sol.dual_ineq) CHECK(d <= 1e-12);
  CHECK(DualObjective(lp, sol) == doctest::Approx(9));
}

TEST_CASE("equality rows and free variables") {
  // max x - y; x + y = 2, x - y <= 1, x, y free. Optimum 1.
  LpProblem lp;
  lp.objective = {1, -1};
  lp.ineq = Matrix::FromRows({{1, -1}}, 2);
  lp.ineq_rhs = {1};
  lp.eq = Matrix::FromRows({{1, 1}}, 2);
  lp.eq_rhs = {2};
  const LpSolution sol = SolveLp(lp);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.objective_value == doctest::Approx(1));
  CHECK(sol.x[0] + sol.x[1] == doctest::Approx(2));
  CHECK(sol.dual_ineq[0] == doctest::Approx(1));
  CHECK(sol.dual_eq[0] == doctest::Approx(0).epsilon(1e-12));
}

TEST_CASE("box bounds including upper-only and shifted lower") {
  // max x + y; x in [1, 3], y <= 2 (y free below), x + y <= 4.5.
  LpProblem lp;
  lp.objective = {1, 1};
  lp.ineq = Matrix::FromRows({{1, 1}}, 2);
  lp.ineq_rhs = {4.5};
  lp.lower = {1, -kInf};
  lp.upper = {3, 2};
  const LpSolution sol = SolveLp(lp);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.objective_value == doctest::Approx(4.5));
  // min x subject to the same box: x = 1, y unbounded below -> unbounded.
  LpProblem lp2 = lp;
  lp2.sense = Sense::kMinimize;
  CHECK(SolveLp(lp2).status == LpStatus::kUnbounded);
}

TEST_CASE("infeasible and unbounded detection") {
  LpProblem inf;
  inf.objective = {1};
  inf.ineq = Matrix::FromRows({{1}, {-1}}, 1);
  inf.ineq_rhs = {1, -2};  // x <= 1 and x >= 2
  CHECK(SolveLp(inf).status == LpStatus::kInfeasible);

  LpProblem eq_inf;
  eq_inf.objective = {1, 1};
  eq_inf.eq = Matrix::FromRows({{1, 1}, {1, 1}}, 2);
  eq_inf.eq_rhs = {1, 2};
  CHECK(SolveLp(eq_inf).status == LpStatus::kInfeasible);

  LpProblem unb;
  unb.objective = {1, 1};
  unb.ineq = Matrix::FromRows({{1, -1}}, 2);
  unb.ineq_rhs = {1};
  unb.lower = {0, 0};
  unb.upper = {kInf, kInf};
  CHECK(SolveLp(unb).status == LpStatus::kUnbounded);
}

TEST_CASE("redundant equality rows") {
  LpProblem lp;
  lp.objective = {1, 2};
  lp.eq = Matrix::FromRows({{1, 1}, {2, 2}}, 2);
  lp.eq_rhs = {3, 6};
  lp.lower = {0, 0};
  lp.upper = {kInf, kInf};
  const LpSolution sol = SolveLp(lp);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.objective_value == doctest::Approx(6));
}

TEST_CASE("degenerate cycling example terminates") {
  // Beale's example, which cycles under the textbook Dantzig rule.
  LpProblem lp;
  lp.sense = Sense::kMinimize;
  lp.objective = {-0.75, 150, -0.02, 6};
  lp.ineq = Matrix::FromRows(
      {{0.25, -60, -0.04, 9}, {0.5, -90, -0.02, 3}, {0, 0, 1, 0}}, 4);
  lp.ineq_rhs = {0, 0, 1};
  lp.lower = {0, 0, 0, 0};
  lp.upper = {kInf, kInf, kInf, kInf};
  const LpSolution sol = SolveLp(lp);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.objective_value == doctest::Approx(-0.05));
  LpOptions bland_now;
  bland_now.bland_after = 1;
  CHECK(SolveLp(lp, bland_now).objective_value == doctest::Approx(-0.05));
}

TEST_CASE("pivot limit raises a numerical failure") {
  LpOptions tight;
  tight.max_pivots = 1;
  CHECK_THROWS_AS(SolveLp(Max2d(), tight), NumericalFailure);
}

TEST_CASE("input checks") {
  LpProblem bad = Max2d();
  bad.ineq_rhs.pop_back();
  CHECK_THROWS_AS(SolveLp(bad), InvalidInputError);
  bad = Max2d();
  bad.objective[0] = std::nan("");
  CHECK_THROWS_AS(SolveLp(bad), InvalidInputError);
  LpSolution not_opt;
  CHECK_THROWS_AS(ExtractDuals(not_opt), std::logic_error);
}

TEST_CASE("debug stream receives tableau dumps") {
  std::ostringstream out;
  LpOptions opts;
  opts.debug = &out;
  SolveLp(Max2d(), opts);
  CHECK_FALSE(out.str().empty());
}

TEST_CASE("random bounded LPs match vertex enumeration") {
  CounterRng rng(DeriveKey(2024, {1}));
  std::size_t checked = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t rows = 5, n = 8;
    LpProblem lp;
    lp.sense = (trial % 2 == 0) ? Sense::kMaximize : Sense::kMinimize;
    lp.objective.resize(n);
    for (double& c : lp.objective) c = rng.Uniform(-5, 5);
    lp.ineq = Matrix(rows, n);
    lp.ineq_rhs.resize(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t j = 0; j < n; ++j) lp.ineq(r, j) = rng.Uniform(-2, 3);
      lp.ineq_rhs[r] = rng.Uniform(1, 10);
    }
    lp.lower.assign(n, 0.0);
    lp.upper.resize(n);
    for (double& u : lp.upper) u = rng.Uniform(1, 4);

    dprs_test::BruteLp b;
    const double sign = lp.sense == Sense::kMaximize ? 1.0 : -1.0;
    for (double c : lp.objective) b.c.push_back(sign * c);
    for (std::size_t r = 0; r < rows; ++r) {
      b.G.emplace_back(lp.ineq.row(r).begin(), lp.ineq.row(r).end());
      b.h.push_back(lp.ineq_rhs[r]);
    }
    for (std::size_t j = 0; j < n; ++j) {
      dprs_test::Vec lo(n, 0.0), hi(n, 0.0);
      lo[j] = -1;
      hi[j] = 1;
      b.G.push_back(lo);
      b.h.push_back(0);
      b.G.push_back(hi);
      b.h.push_back(lp.upper[j]);
    }
    const auto brute = dprs_test::EnumerateVertices(b);
    REQUIRE(brute.vertices > 0);  // x = 0 is always feasible
    const LpSolution sol = SolveLp(lp);
    REQUIRE(sol.status == LpStatus::kOptimal);
    CHECK(sol.objective_value == doctest::Approx(sign * brute.value).epsilon(1e-9));
    CHECK(DualObjective(lp, sol) ==
          doctest::Approx(sol.objective_value).epsilon(1e-9));
    ++checked;
  }
  CHECK(checked == 20);
}

}  // namespace
}  // namespace dprs
