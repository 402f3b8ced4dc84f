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

#include "dprs/coordinator.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "dprs/errors.h"
#include "dprs/rng.h"

namespace dprs {

const char* ToString(Mode mode) {
  switch (mode) {
    case Mode::kDataHiding:
      return "datahiding";
    case Mode::kPureDp:
      return "pure";
    case Mode::kApproxDp:
      return "approx";
  }
  return "unknown";
}

double StepLength(const StepScheme& scheme, std::size_t t) {
  struct Visitor {
    std::size_t t;
    double operator()(const Diminishing& d) const {
      if (t == 0) throw InvalidInputError("diminishing step needs t >= 1");
      return d.nu0 / std::sqrt(static_cast<double>(t));
    }
    double operator()(const ConstantStep& c) const { return c.nu; }
    double operator()(const TheoremConstant& c) const {
      return c.M / (c.B * std::sqrt(static_cast<double>(c.T)));
    }
  };
  return std::visit(Visitor{t}, scheme);
}

double TheoremStepB(Regime regime, double sigma, double s_bar_total_norm,
                    std::size_t T, double eps, double delta) {
  const double Td = static_cast<double>(T);
  const double tail = s_bar_total_norm * s_bar_total_norm;
  if (regime == Regime::kPure) {
    return std::sqrt(2.0 * Td * Td * sigma / (eps * eps) + tail);
  }
  return std::sqrt(8.0 * Td / (eps * eps) *
                       std::log(std::numbers::e + eps / delta) * sigma +
                   tail);
}

DualState DualUpdate(const DualState& state, std::span<const double> capacity,
                     std::span<const Vector> released) {
  const std::size_t m = capacity.size();
  if (state.lambda.size() != m) {
    throw InvalidInputError("dual update: lambda length != m");
  }
  Vector subgradient(capacity.begin(), capacity.end());
  for (const Vector& s : released) {
    if (s.size() != m) {
      throw InvalidInputError("dual update: released allotment length != m");
    }
    for (std::size_t i = 0; i < m; ++i) subgradient[i] -= s[i];
  }
  DualState next = state;
  next.t = state.t + 1;
  const double nu = StepLength(state.step, next.t);
  for (std::size_t i = 0; i < m; ++i) next.lambda[i] -= nu * subgradient[i];
  return next;
}

double GapPct(double dual_value, double reference) {
  return (dual_value - reference) / std::abs(reference) * 100.0;
}

namespace {

PrivacyConfig RegimeFor(const RunConfig& config) {
  PrivacyConfig p = config.privacy;
  const Regime want =
      config.mode == Mode::kPureDp ? Regime::kPure : Regime::kApprox;
  if (p.regime != want) {
    throw InvalidInputError("run: privacy regime does not match mode");
  }
  if (want == Regime::kPure) p.delta = 0.0;
  p.Validate();
  return p;
}

}  // namespace

RunTrace Run(const Instance& inst, const RunConfig& config) {
  const ValidationReport report = ValidateInstance(inst);
  if (!report.ok()) throw InvalidInputError("run: " + report.Summary());
  const std::size_t m = inst.num_resources();
  const std::size_t K = inst.num_parties();
  const bool is_private = config.mode != Mode::kDataHiding;

  std::optional<PrivacyAccountant> accountant;
  std::vector<PartyAgent> agents;
  agents.reserve(K);
  if (is_private) {
    const PrivacyConfig privacy = RegimeFor(config);
    if (config.max_iters > privacy.T) throw BudgetExhaustedError();
    accountant.emplace(privacy);
    const std::uint64_t noise_seed = DeriveKey(config.seed, {0x6e6f6973ULL});
    for (std::size_t k = 0; k < K; ++k) {
      agents.emplace_back(k, inst.parties[k], privacy, noise_seed);
    }
  } else {
    for (std::size_t k = 0; k < K; ++k) agents.emplace_back(k, inst.parties[k]);
  }

  DualState state;
  state.lambda = config.lambda0.empty() ? Vector(m, 0.0) : config.lambda0;
  if (state.lambda.size() != m) {
    throw InvalidInputError("run: lambda0 length != m");
  }
  state.step = config.step;

  RunTrace trace;
  trace.mode = config.mode;
  trace.reference_value = config.reference_value;
  for (const PartyAgent& a : agents) trace.noise_scales.push_back(a.noise_scale());
  trace.records.reserve(config.max_iters);

  std::vector<Vector> released(K);
  for (std::size_t t = 1; t <= config.max_iters; ++t) {
    if (accountant) accountant->RecordIteration();
    IterateRecord rec;
    rec.t = t;
    rec.lambda_before = state.lambda;
    rec.allotments.resize(K);
    const PriceMessage price{t, state.lambda};
    double dual = Dot(inst.capacity, state.lambda);
    Vector total(m, 0.0);
    for (std::size_t k = 0; k < K; ++k) {
      if (config.observer) config.observer->OnPrice(k, price);
      AllotmentMessage reply = agents[k].Respond(price);
      if (config.observer) config.observer->OnAllotment(k, reply);
      released[k] = std::move(reply.released);
      const SubproblemResult& measured = agents[k].last_result();
      dual += measured.g_value;
      rec.primal_surrogate += measured.utility;
      rec.allotments[k] = measured.s;
      for (std::size_t i = 0; i < m; ++i) total[i] += measured.s[i];
    }
    rec.dual_value = dual;
    rec.overflow.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      rec.overflow[i] = std::max(0.0, total[i] - inst.capacity[i]);
    }
    rec.released = released;
    trace.records.push_back(std::move(rec));
    state = DualUpdate(state, inst.capacity, released);
  }

  if (!trace.records.empty()) {
    const auto best_it = std::min_element(
        trace.records.begin(), trace.records.end(),
        [](const IterateRecord& a, const IterateRecord& b) {
          return a.dual_value < b.dual_value;
        });
    BestIterate& best = trace.best;
    best.t = best_it->t;
    best.dual_value = best_it->dual_value;
    best.gap_pct = config.reference_value
                       ? GapPct(best.dual_value, *config.reference_value)
                       : std::numeric_limits<double>::quiet_NaN();
    best.allotments = best_it->allotments;
    best.overflow = best_it->overflow;
    for (std::size_t k = 0; k < K; ++k) {
      const double claim = Norm1(inst.parties[k].claim_bound);
      best.received_fraction.push_back(
          claim > 0.0 ? Norm1(best.allotments[k]) / claim : 0.0);
    }
  }
  if (accountant) trace.privacy_spent = accountant->spent();
  return trace;
}

}  // namespace dprs
