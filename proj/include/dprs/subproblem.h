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

// The party-local agent.
//
// Given prices lambda, party k solves
//   g(lambda; D_k) = max  u_k' x - lambda' s
//                    s.t. A_k x <= s,  B_k x <= b_k,  0 <= s <= s_bar_k
// and releases its allotment s (plus Laplace noise in the private modes).

#ifndef DPRS_SUBPROBLEM_H_
#define DPRS_SUBPROBLEM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "dprs/lp_solver.h"
#include "dprs/model.h"
#include "dprs/privacy.h"

namespace dprs {

struct SubproblemResult {
  Vector x;
  Vector s;
  double g_value = 0.0;  // u'x - lambda's
  double utility = 0.0;  // u'x
};

// Among optimal allotments the released one is canonical: s_i = s_bar_i
// where lambda_i < 0, otherwise the smallest claim max(0, (A x)_i).
// Throws InfeasibleError / UnboundedError naming the party.
SubproblemResult SolveSubproblem(const PartyData& party,
                                 std::span<const double> lambda,
                                 std::size_t party_index = 0,
                                 const LpOptions& options = {});

// s + noise, componentwise. The result is released as is: no clamping.
Vector PerturbAllotment(std::span<const double> s,
                        std::span<const double> noise);

// Coordinator -> party.
struct PriceMessage {
  std::size_t t = 0;
  Vector lambda;
};

// Party -> coordinator.
struct AllotmentMessage {
  std::size_t t = 0;
  Vector released;
};

class PartyAgent {
 public:
  // Data-hiding agent: releases s unperturbed.
  PartyAgent(std::size_t index, PartyData data);
  // Private agent: derives its own noise scale from its claim bound.
  PartyAgent(std::size_t index, PartyData data, const PrivacyConfig& config,
             std::uint64_t noise_seed);

  AllotmentMessage Respond(const PriceMessage& message);

  // Measurement channel for the harness. Never part of the protocol.
  const SubproblemResult& last_result() const { return last_; }

  std::size_t index() const { return index_; }
  double noise_scale() const { return noise_scale_; }

 private:
  void BuildProblem();
  SubproblemResult Solve(std::span<const double> lambda);

  std::size_t index_;
  PartyData data_;
  std::optional<std::uint64_t> noise_seed_;
  double noise_scale_ = 0.0;
  LpProblem problem_;
  SubproblemResult last_;
};

}  // namespace dprs

#endif  // DPRS_SUBPROBLEM_H_
