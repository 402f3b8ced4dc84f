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

// Seeded synthetic production-planning instances.
//
// Default setup: 5 parties, 5 shared resources with capacities in [10, 20].
// Party k has c_k in {5..10} private capacities with limits in [10, 20],
// n_k in {10..20} products, usage coefficients in [0, 5], private capacity
// coefficients in [0, 1] and utilities in [50, 150]. Nonnegativity is added
// as explicit rows -x_j <= 0. Product demands are drawn around the
// demand-free centralized optimum and appended as rows x_j <= d_j.

#ifndef DPRS_SYNTHGEN_H_
#define DPRS_SYNTHGEN_H_

#include <cstddef>
#include <cstdint>
#include <string>

#include "dprs/model.h"

namespace dprs {

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};
struct RealRange {
  double lo = 0.0;
  double hi = 0.0;
};

struct GeneratorParams {
  std::size_t parties = 5;
  std::size_t resources = 5;
  IntRange private_capacities{5, 10};
  IntRange products{10, 20};
  RealRange capacity{10.0, 20.0};
  RealRange private_rhs{10.0, 20.0};
  RealRange usage{0.0, 5.0};
  RealRange private_coeff{0.0, 1.0};
  RealRange utility{50.0, 150.0};
  bool demands = true;
  // d ~ U[demand_low * x', demand_high * x'], x' = max(x_hat, demand_floor).
  double demand_low = 0.5;
  double demand_high = 1.5;
  double demand_floor = 1.0;
};

// Keys: parties, resources, private_capacities [lo, hi], products [lo, hi],
// capacity, private_rhs, usage, private_coeff, utility [lo, hi], demands,
// demand_low, demand_high, demand_floor. Unknown keys are rejected.
GeneratorParams ParamsFromJson(const std::string& text);
std::string ParamsToJson(const GeneratorParams& params);

// Pure function of (seed, params). s_bar_k defaults to c.
Instance Generate(std::uint64_t seed, const GeneratorParams& params = {});

// Appends demand rows drawn around the demand-free centralized optimum.
Instance AttachDemands(const Instance& inst, std::uint64_t seed,
                       const GeneratorParams& params = {});

// s_bar_1 = share * c; the other parties split (market - share) * c per
// resource by normalized uniform weights, each share capped at c. For
// market equal to the number of parties every s_bar_k = c.
// Throws InvalidInputError for an infeasible (share, market) combination.
Instance ScenarioBounds(const Instance& inst, double share, double market,
                        std::uint64_t seed);

}  // namespace dprs

#endif  // DPRS_SYNTHGEN_H_
