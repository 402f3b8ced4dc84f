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

// Dual-decomposition coordinator.
//
// Iteration t (1-based) broadcasts lambda^(t-1), collects the released
// allotments s~_k^(t), and updates
//   lambda^(t) = lambda^(t-1) - nu^(t) (c - sum_k s~_k^(t)).
// lambda is not projected: it multiplies the equality sum_k s_k = c.
// In the data-hiding mode s~ = s; in the private modes each party adds its
// own Laplace noise and at most T iterations may run.

#ifndef DPRS_COORDINATOR_H_
#define DPRS_COORDINATOR_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "dprs/model.h"
#include "dprs/privacy.h"
#include "dprs/subproblem.h"

namespace dprs {

enum class Mode { kDataHiding, kPureDp, kApproxDp };

const char* ToString(Mode mode);

// nu0 / sqrt(t).
struct Diminishing {
  double nu0 = 1.0;
};
struct ConstantStep {
  double nu = 1.0;
};
// M / (B sqrt(T)), the constant step of the suboptimality analysis.
struct TheoremConstant {
  double M = 0.0;
  double B = 1.0;
  std::size_t T = 1;
};
using StepScheme = std::variant<Diminishing, ConstantStep, TheoremConstant>;

// Throws InvalidInputError for t = 0 under Diminishing.
double StepLength(const StepScheme& scheme, std::size_t t);

// B^2 = 2 T^2 sigma / eps^2 + ||s_bar_K||^2 (pure) or
// B^2 = (8 T / eps^2) ln(e + eps / delta) sigma + ||s_bar_K||^2 (approx).
double TheoremStepB(Regime regime, double sigma, double s_bar_total_norm,
                    std::size_t T, double eps, double delta);

struct DualState {
  Vector lambda;
  std::size_t t = 0;  // updates applied so far
  StepScheme step = Diminishing{};
};

// One subgradient step using nu^(t+1). Leaves lambda unprojected.
DualState DualUpdate(const DualState& state, std::span<const double> capacity,
                     std::span<const Vector> released);

struct IterateRecord {
  std::size_t t = 0;
  Vector lambda_before;
  std::vector<Vector> released;
  // Measurement channel (harness only).
  double dual_value = 0.0;        // D(lambda_before)
  double primal_surrogate = 0.0;  // sum_k u_k' x_k
  Vector overflow;                // max(0, sum_k s_k - c)
  std::vector<Vector> allotments;
};

struct BestIterate {
  std::size_t t = 0;
  double dual_value = 0.0;
  double gap_pct = 0.0;  // NaN without a reference value
  std::vector<Vector> allotments;
  Vector received_fraction;  // ||s_k||_1 / ||s_bar_k||_1
  Vector overflow;
};

struct RunTrace {
  Mode mode = Mode::kDataHiding;
  std::vector<IterateRecord> records;
  BestIterate best;
  std::optional<double> reference_value;
  PrivacyLoss privacy_spent;
  Vector noise_scales;
};

// Sees every message crossing the party boundary.
class MessageObserver {
 public:
  virtual ~MessageObserver() = default;
  virtual void OnPrice(std::size_t party, const PriceMessage& message) = 0;
  virtual void OnAllotment(std::size_t party,
                           const AllotmentMessage& message) = 0;
};

struct RunConfig {
  Mode mode = Mode::kDataHiding;
  // Used by the private modes; regime must agree with mode.
  PrivacyConfig privacy;
  StepScheme step = Diminishing{};
  std::size_t max_iters = 1000;
  std::uint64_t seed = 0;
  Vector lambda0;  // empty: zeros
  // Z_P, when known, for gap reporting.
  std::optional<double> reference_value;
  MessageObserver* observer = nullptr;
};

// Relative gap in percent, (dual - reference) / |reference| * 100.
double GapPct(double dual_value, double reference);

// Throws BudgetExhaustedError when a private run asks for more than T
// iterations, InfeasibleError when a party's polytope is empty.
RunTrace Run(const Instance& inst, const RunConfig& config);

}  // namespace dprs

#endif  // DPRS_COORDINATOR_H_
