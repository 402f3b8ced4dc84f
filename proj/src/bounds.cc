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

#include "dprs/bounds.h"

#include <cmath>
#include <numbers>

#include "dprs/errors.h"

namespace dprs {

void BoundInputs::Validate() const {
  if (M < 0 || sigma < 0 || s_bar_total_norm < 0) {
    throw InvalidInputError("bounds: inputs must be nonnegative");
  }
  if (T < 1) throw InvalidInputError("bounds: T must be >= 1");
}

BoundInputs MakeBoundInputs(const Instance& inst, double M, std::size_t T,
                            double epsilon, double delta, NormKind norm) {
  BoundInputs in;
  in.M = M;
  in.T = T;
  in.epsilon = epsilon;
  in.delta = delta;
  Vector total(inst.num_resources(), 0.0);
  for (const PartyData& p : inst.parties) {
    const double nrm = ApplyNorm(norm, p.claim_bound);
    in.sigma += nrm * nrm;
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += p.claim_bound[i];
  }
  in.s_bar_total_norm = ApplyNorm(norm, total);
  return in;
}

double PureBound(const BoundInputs& in) {
  in.Validate();
  if (!(in.epsilon > 0)) throw InvalidInputError("pure bound: epsilon <= 0");
  const double T = static_cast<double>(in.T);
  return in.M * std::sqrt(2.0 * T * in.sigma / (in.epsilon * in.epsilon) +
                          in.s_bar_total_norm * in.s_bar_total_norm / T);
}

double ApproxBound(const BoundInputs& in) {
  in.Validate();
  if (!(in.epsilon > 0 && in.epsilon < 0.9)) {
    throw InvalidInputError("approx bound: epsilon must be in (0, 0.9)");
  }
  if (!(in.delta > 0 && in.delta <= 1)) {
    throw InvalidInputError("approx bound: delta must be in (0, 1]");
  }
  const double T = static_cast<double>(in.T);
  const double log_term = std::log(std::numbers::e + in.epsilon / in.delta);
  return in.M *
         std::sqrt(8.0 * log_term * in.sigma / (in.epsilon * in.epsilon) +
                   in.s_bar_total_norm * in.s_bar_total_norm / T);
}

}  // namespace dprs
