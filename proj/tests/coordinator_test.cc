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
#include <vector>

#include "doctest.h"
#include "dprs/coordinator.h"
#include "dprs/errors.h"
#include "dprs/harness.h"
#include "dprs/oracle.h"
#include "dprs/rng.h"
#include "dprs/synthgen.h"
#include "support/fixtures.h"

namespace dprs {
namespace {

// mpmath, 40 digits: B for M = sigma = ||s_bar_K|| = 1, T = 100, eps = 0.1.
constexpr double kTheoremB = 1414.213915926441447912675305414975261712;
constexpr double kTheoremNu = 7.071066044099185189970781541684105466507e-5;

TEST_CASE("step lengths") {
  CHECK(StepLength(Diminishing{1.0}, 4) == 0.5);
  CHECK(StepLength(Diminishing{1.0}, 1) == 1.0);
  CHECK(StepLength(Diminishing{2.0}, 16) == 0.5);
  CHECK_THROWS_AS(StepLength(Diminishing{1.0}, 0), InvalidInputError);
  CHECK(StepLength(ConstantStep{0.3}, 0) == 0.3);
  CHECK(StepLength(ConstantStep{0.3}, 99) == 0.3);
}

TEST_CASE("theorem constant step") {
  const double B = TheoremStepB(Regime::kPure, 1.0, 1.0, 100, 0.1, 0.0);
  CHECK(std::abs(B - kTheoremB) <= 1e-12 * kTheoremB);
  const double nu = StepLength(TheoremConstant{1.0, B, 100}, 7);
  CHECK(std::abs(nu - kTheoremNu) <= 1e-12 * kTheoremNu);
  // Approx: B^2 = (8T/eps^2) ln(e + eps/delta) sigma + ||s_bar_K||^2.
  const double Ba = TheoremStepB(Regime::kApprox, 2.0, 3.0, 50, 0.2, 0.1);
  CHECK(Ba * Ba == doctest::Approx(8.0 * 50 / 0.04 * std::log(std::exp(1.0) + 2.0) * 2.0 + 9.0));
}

TEST_CASE("dual update examples") {
  DualState s;
  s.lambda = {0.0};
  s.step = ConstantStep{1.0};
  DualState n = DualUpdate(s, Vector{5.0}, std::vector<Vector>{{5.0}});
  CHECK(n.lambda == Vector{0.0});
  CHECK(n.t == 1);
  s.step = ConstantStep{0.5};
  n = DualUpdate(s, Vector{4.0}, std::vector<Vector>{{2.0}, {4.0}});
  CHECK(n.lambda == Vector{1.0});
  // No projection: prices go negative under excess capacity.
  n = DualUpdate(s, Vector{4.0}, std::vector<Vector>{{0.0}});
  CHECK(n.lambda == Vector{-2.0});
  CHECK_THROWS_AS(DualUpdate(s, Vector{1.0, 2.0}, std::vector<Vector>{{1.0, 2.0}}),
                  InvalidInputError);
}

TEST_CASE("noiseless update equals a separately coded subgradient step") {
  CounterRng rng(DeriveKey(3, {3}));
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + static_cast<std::size_t>(rng.UniformInt(0, 6));
    const std::size_t K = 1 + static_cast<std::size_t>(rng.UniformInt(0, 5));
    DualState s;
    s.t = static_cast<std::size_t>(rng.UniformInt(0, 50));
    s.step = Diminishing{rng.Uniform(0.1, 3)};
    Vector c(m);
    for (double& v : c) v = rng.Uniform(10, 20);
    for (std::size_t i = 0; i < m; ++i) s.lambda.push_back(rng.Uniform(-5, 5));
    std::vector<Vector> alloc(K, Vector(m));
    for (auto& a : alloc) for (double& v : a) v = rng.Uniform(0, 10);

    const double nu = std::get<Diminishing>(s.step).nu0 / std::sqrt(s.t + 1.0);
    Vector expected = s.lambda;
    for (std::size_t i = 0; i < m; ++i) {
      double used = 0.0;
      for (std::size_t k = 0; k < K; ++k) used += alloc[k][i];
      expected[i] = s.lambda[i] - nu * (c[i] - used);
    }
    const DualState n = DualUpdate(s, c, alloc);
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(n.lambda[i] == doctest::Approx(expected[i]).epsilon(1e-13));
    }
  }
}

RunConfig DataHiding(std::size_t iters, double z_p) {
  RunConfig c;
  c.mode = Mode::kDataHiding;
  c.max_iters = iters;
  c.reference_value = z_p;
  return c;
}

TEST_CASE("data-hiding run: weak duality along the trace and best iterate") {
  const Instance inst = Generate(51, GeneratorParams{});
  const double z_p = SolveCentralized(inst).value;
  const RunTrace trace = Run(inst, DataHiding(300, z_p));
  REQUIRE(trace.records.size() == 300);
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_t = 0;
  for (const IterateRecord& r : trace.records) {
    CHECK(r.dual_value >= z_p - 1e-7 * std::abs(z_p));
    CHECK(r.released == r.allotments);
    if (r.dual_value < best) {
      best = r.dual_value;
      best_t = r.t;
    }
  }
  CHECK(trace.best.t == best_t);
  CHECK(trace.best.dual_value == best);
  CHECK(trace.best.gap_pct == doctest::Approx(GapPct(best, z_p)));
  CHECK(trace.records.front().lambda_before == Vector(inst.num_resources(), 0.0));
  for (std::size_t k = 0; k < inst.num_parties(); ++k) {
    const double f = trace.best.received_fraction[k];
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);
    CHECK(f == doctest::Approx(Norm1(trace.best.allotments[k]) /
                               Norm1(inst.parties[k].claim_bound)));
  }
  const auto gaps = BestSoFarGap(trace);
  for (std::size_t t = 1; t < gaps.size(); ++t) CHECK(gaps[t] <= gaps[t - 1]);
}

TEST_CASE("records satisfy the update recursion") {
  const Instance inst = Generate(53, GeneratorParams{});
  RunConfig cfg = DataHiding(50, SolveCentralized(inst).value);
  cfg.step = Diminishing{0.7};
  const RunTrace trace = Run(inst, cfg);
  for (std::size_t t = 1; t < trace.records.size(); ++t) {
    DualState s;
    s.lambda = trace.records[t - 1].lambda_before;
    s.t = t - 1;
    s.step = cfg.step;
    const DualState n = DualUpdate(s, inst.capacity, trace.records[t - 1].released);
    CHECK(n.lambda == trace.records[t].lambda_before);
  }
}

TEST_CASE("initial prices are configurable") {
  const Instance inst = Generate(55, GeneratorParams{});
  RunConfig cfg = DataHiding(3, SolveCentralized(inst).value);
  cfg.lambda0 = Vector(inst.num_resources(), 2.5);
  CHECK(Run(inst, cfg).records[0].lambda_before == cfg.lambda0);
  cfg.lambda0 = Vector{1.0};
  CHECK_THROWS_AS(Run(inst, cfg), InvalidInputError);
}

TEST_CASE("one party converges to the oracle optimum") {
  GeneratorParams params;
  params.parties = 1;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Instance inst = Generate(seed, params);
    const double z_p = SolveCentralized(inst).value;
    const RunTrace trace = Run(inst, DataHiding(2000, z_p));
    CHECK(trace.best.gap_pct <= 0.1);
  }
}

TEST_CASE("the one-party fixture reaches Z_P = 6") {
  const Instance inst = dprs_test::OnePartyInstance();
  const RunTrace trace = Run(inst, DataHiding(2000, 6.0));
  CHECK(trace.best.dual_value == doctest::Approx(6.0).epsilon(1e-3));
}

RunConfig Private(Mode mode, double eps, double delta, std::size_t T,
                  std::size_t iters, std::uint64_t seed) {
  RunConfig c;
  c.mode = mode;
  c.privacy.regime = mode == Mode::kPureDp ? Regime::kPure : Regime::kApprox;
  c.privacy.epsilon = eps;
  c.privacy.delta = delta;
  c.privacy.T = T;
  c.max_iters = iters;
  c.seed = seed;
  return c;
}

TEST_CASE("private runs never exceed T") {
  const Instance inst = Generate(57, GeneratorParams{});
  CHECK_THROWS_AS(Run(inst, Private(Mode::kPureDp, 0.1, 0, 100, 101, 1)),
                  BudgetExhaustedError);
  CHECK_THROWS_AS(Run(inst, Private(Mode::kApproxDp, 0.1, 0.1, 10, 11, 1)),
                  BudgetExhaustedError);
  const RunTrace ok = Run(inst, Private(Mode::kPureDp, 0.1, 0, 100, 100, 1));
  CHECK(ok.records.size() == 100);
  CHECK(ok.privacy_spent.epsilon == doctest::Approx(0.1));
  const RunTrace part = Run(inst, Private(Mode::kPureDp, 0.2, 0, 100, 50, 1));
  CHECK(part.privacy_spent.epsilon == doctest::Approx(0.1));
}

TEST_CASE("regime must agree with the mode") {
  const Instance inst = Generate(59, GeneratorParams{});
  RunConfig c = Private(Mode::kPureDp, 0.1, 0, 10, 10, 1);
  c.privacy.regime = Regime::kApprox;
  CHECK_THROWS_AS(Run(inst, c), InvalidInputError);
}

TEST_CASE("private traces are reproducible and seed dependent") {
  const Instance inst = Generate(61, GeneratorParams{});
  const RunTrace a = Run(inst, Private(Mode::kApproxDp, 0.1, 0.1, 20, 20, 8));
  const RunTrace b = Run(inst, Private(Mode::kApproxDp, 0.1, 0.1, 20, 20, 8));
  const RunTrace c = Run(inst, Private(Mode::kApproxDp, 0.1, 0.1, 20, 20, 9));
  for (std::size_t t = 0; t < 20; ++t) {
    CHECK(a.records[t].released == b.records[t].released);
    CHECK(a.records[t].dual_value == b.records[t].dual_value);
  }
  CHECK(a.records[0].released != c.records[0].released);
  for (std::size_t k = 0; k < inst.num_parties(); ++k) {
    CHECK(a.noise_scales[k] ==
          ApproxScale(Norm2(inst.parties[k].claim_bound), 0.1, 0.1, 20));
  }
}

TEST_CASE("vanishing noise reproduces the data-hiding trace") {
  const Instance inst = Generate(63, GeneratorParams{});
  const double z_p = SolveCentralized(inst).value;
  RunConfig dp = Private(Mode::kPureDp, 1e300, 0, 200, 200, 4);
  dp.reference_value = z_p;
  const RunTrace a = Run(inst, dp);
  const RunTrace b = Run(inst, DataHiding(200, z_p));
  for (double s : a.noise_scales) CHECK(s <= 1e-12);
  for (std::size_t t = 0; t < 200; ++t) {
    CHECK(a.records[t].lambda_before == b.records[t].lambda_before);
    CHECK(a.records[t].dual_value == b.records[t].dual_value);
    CHECK(a.records[t].primal_surrogate == b.records[t].primal_surrogate);
    CHECK(a.records[t].allotments == b.records[t].allotments);
    // Released zeros carry the residual noise, far below any price effect.
    for (std::size_t k = 0; k < inst.num_parties(); ++k) {
      for (std::size_t i = 0; i < inst.num_resources(); ++i) {
        CHECK(std::abs(a.records[t].released[k][i] - b.records[t].released[k][i]) <=
              1e-280);
      }
    }
  }
}

// Records exactly what crosses the party boundary.
class Capture : public MessageObserver {
 public:
  void OnPrice(std::size_t party, const PriceMessage& m) override {
    prices.emplace_back(party, m);
  }
  void OnAllotment(std::size_t party, const AllotmentMessage& m) override {
    allotments.emplace_back(party, m);
  }
  std::vector<std::pair<std::size_t, PriceMessage>> prices;
  std::vector<std::pair<std::size_t, AllotmentMessage>> allotments;
};

TEST_CASE("only (t, lambda) and (t, s~) cross the boundary") {
  // Exactly two fields per message type.
  {
    auto [t, lambda] = PriceMessage{};
    auto [t2, released] = AllotmentMessage{};
    (void)t;
    (void)lambda;
    (void)t2;
    (void)released;
  }
  const Instance inst = Generate(65, GeneratorParams{});
  Capture cap;
  RunConfig cfg = Private(Mode::kApproxDp, 0.1, 0.1, 10, 10, 3);
  cfg.observer = &cap;
  const RunTrace trace = Run(inst, cfg);
  const std::size_t K = inst.num_parties();
  REQUIRE(cap.prices.size() == 10 * K);
  REQUIRE(cap.allotments.size() == 10 * K);
  for (std::size_t i = 0; i < cap.prices.size(); ++i) {
    const auto& [party, price] = cap.prices[i];
    const auto& [party2, reply] = cap.allotments[i];
    CHECK(party == i % K);
    CHECK(party2 == party);
    CHECK(price.t == i / K + 1);
    CHECK(reply.t == price.t);
    CHECK(price.lambda == trace.records[i / K].lambda_before);
    CHECK(reply.released == trace.records[i / K].released[party]);
    CHECK(reply.released.size() == inst.num_resources());
  }
}

TEST_CASE("infeasible party aborts the run") {
  Instance inst = dprs_test::OnePartyInstance();
  inst.parties[0].rhs = {-1.0, 0.0};
  CHECK_THROWS_AS(Run(inst, DataHiding(5, 1.0)), InfeasibleError);
}

}  // namespace
}  // namespace dprs
