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

#include "dprs/subproblem.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dprs/errors.h"

namespace dprs {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

LpProblem BuildSubproblem(const PartyData& party) {
  const std::size_t n = party.num_vars();
  const std::size_t m = party.claim_bound.size();
  LpProblem lp;
  lp.sense = Sense::kMaximize;
  lp.objective.assign(n + m, 0.0);
  std::copy(party.utility.begin(), party.utility.end(), lp.objective.begin());
  lp.lower.assign(n + m, -kInf);
  lp.upper.assign(n + m, kInf);
  for (std::size_t i = 0; i < m; ++i) {
    lp.lower[n + i] = 0.0;
    lp.upper[n + i] = party.claim_bound[i];
  }
  lp.ineq = Matrix(0, n + m);
  Vector row(n + m, 0.0);
  for (std::size_t r = 0; r < party.constraints.rows(); ++r) {
    std::fill(row.begin(), row.end(), 0.0);
    auto b = party.constraints.row(r);
    std::copy(b.begin(), b.end(), row.begin());
    lp.ineq.AppendRow(row);
    lp.ineq_rhs.push_back(party.rhs[r]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    std::fill(row.begin(), row.end(), 0.0);
    auto a = party.usage.row(i);
    std::copy(a.begin(), a.end(), row.begin());
    row[n + i] = -1.0;
    lp.ineq.AppendRow(row);
    lp.ineq_rhs.push_back(0.0);
  }
  return lp;
}

SubproblemResult SolvePrepared(const PartyData& party, LpProblem& lp,
                               std::span<const double> lambda,
                               std::size_t party_index,
                               const LpOptions& options) {
  const std::size_t n = party.num_vars();
  const std::size_t m = party.claim_bound.size();
  if (lambda.size() != m) {
    throw InvalidInputError("subproblem: lambda must have length m");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::isfinite(lambda[i])) {
      throw InvalidInputError("subproblem: lambda must be finite");
    }
    lp.objective[n + i] = -lambda[i];
  }
  const LpSolution sol = SolveLp(lp, options);
  const std::string who = "party " + std::to_string(party_index);
  if (sol.status == LpStatus::kInfeasible) {
    throw InfeasibleError(who + ": private constraints are infeasible",
                          party_index);
  }
  if (sol.status == LpStatus::kUnbounded) {
    throw UnboundedError(who + ": subproblem is unbounded");
  }
  SubproblemResult out;
  out.x.assign(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(n));
  const Vector used = party.usage.Multiply(out.x);
  out.s.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    out.s[i] = lambda[i] < 0.0
                   ? party.claim_bound[i]
                   : std::clamp(used[i], 0.0, party.claim_bound[i]);
  }
  out.utility = Dot(party.utility, out.x);
  out.g_value = out.utility - Dot(lambda, out.s);
  return out;
}

}  // namespace

SubproblemResult SolveSubproblem(const PartyData& party,
                                 std::span<const double> lambda,
                                 std::size_t party_index,
                                 const LpOptions& options) {
  LpProblem lp = BuildSubproblem(party);
  return SolvePrepared(party, lp, lambda, party_index, options);
}

Vector PerturbAllotment(std::span<const double> s,
                        std::span<const double> noise) {
  if (s.size() != noise.size()) {
    throw InvalidInputError("perturb: allotment and noise lengths differ");
  }
  Vector out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i] + noise[i];
  return out;
}

PartyAgent::PartyAgent(std::size_t index, PartyData data)
    : index_(index), data_(std::move(data)) {
  BuildProblem();
}

PartyAgent::PartyAgent(std::size_t index, PartyData data,
                       const PrivacyConfig& config, std::uint64_t noise_seed)
    : index_(index), data_(std::move(data)), noise_seed_(noise_seed) {
  noise_scale_ = PartyNoiseScale(config, data_);
  BuildProblem();
}

void PartyAgent::BuildProblem() { problem_ = BuildSubproblem(data_); }

AllotmentMessage PartyAgent::Respond(const PriceMessage& message) {
  last_ = SolvePrepared(data_, problem_, message.lambda, index_, {});
  AllotmentMessage reply{message.t, last_.s};
  if (noise_seed_) {
    const NoiseStream stream{*noise_seed_, index_, message.t, noise_scale_};
    reply.released =
        PerturbAllotment(last_.s, SampleLaplace(stream, last_.s.size()));
  }
  return reply;
}

}  // namespace dprs
