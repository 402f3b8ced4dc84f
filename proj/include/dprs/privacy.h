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

// Laplace noise and privacy accounting.
//
// Pure regime: each of T releases adds Lap(0, T * Delta_k / eps) noise per
// component, Delta_k = ||s_bar_k||_inf, and basic composition yields
// (eps, 0) overall. Approximate regime: Lap(0, (2 ||s_bar_k|| / eps) *
// sqrt(T ln(e + eps / delta))) noise under advanced composition yields
// (eps, delta), valid for eps in (0, 0.9) and delta in (0, 1].

#ifndef DPRS_PRIVACY_H_
#define DPRS_PRIVACY_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "dprs/model.h"

namespace dprs {

enum class Regime { kPure, kApprox };
enum class NormKind { kEuclidean, kInfinity };

const char* ToString(Regime regime);

struct PrivacyConfig {
  Regime regime = Regime::kPure;
  double epsilon = 1.0;
  double delta = 0.0;
  std::size_t T = 1;
  // Norm applied to s_bar_k in the approximate-regime scale and in sigma.
  NormKind bound_norm = NormKind::kEuclidean;

  // Throws InvalidInputError when parameters are outside their range.
  void Validate() const;
};

double ApplyNorm(NormKind kind, std::span<const double> v);

// T * delta_k / eps.
double PureScale(double delta_k, double eps, std::size_t T);

// (2 * norm / eps) * sqrt(T * ln(e + eps / delta)).
double ApproxScale(double bound_norm, double eps, double delta,
                   std::size_t T);

// Noise scale a party derives from its own claim bound.
double PartyNoiseScale(const PrivacyConfig& config, const PartyData& party);

struct NoiseStream {
  std::uint64_t seed = 0;
  std::size_t party = 0;
  std::size_t iteration = 0;
  double scale = 0.0;
};

// Inverse CDF of Lap(0, scale) at u in (0, 1).
double LaplaceQuantile(double u, double scale);

// i.i.d. Lap(0, scale) components; a pure function of the stream fields.
Vector SampleLaplace(const NoiseStream& stream, std::size_t dim);

struct PrivacyLoss {
  double epsilon = 0.0;
  double delta = 0.0;
};

// Pure: iterations * eps / T. Approx: (eps, delta) once all T releases are
// made; before that, the basic-composition sum of the per-release Laplace
// budgets when it is tighter. Throws BudgetExhaustedError past T.
PrivacyLoss PrivacySpent(const PrivacyConfig& config,
                         std::size_t iterations_run);

// Per-release epsilon of the Laplace mechanism implied by the scale.
double PerReleaseEpsilon(const PrivacyConfig& config);

// Owned by the coordinator; one call per released iteration.
class PrivacyAccountant {
 public:
  explicit PrivacyAccountant(PrivacyConfig config);

  // Throws BudgetExhaustedError on the (T+1)-th call.
  void RecordIteration();

  std::size_t iterations() const { return iterations_; }
  std::size_t remaining() const { return config_.T - iterations_; }
  PrivacyLoss spent() const { return PrivacySpent(config_, iterations_); }
  const PrivacyConfig& config() const { return config_; }

 private:
  PrivacyConfig config_;
  std::size_t iterations_ = 0;
};

}  // namespace dprs

#endif  // DPRS_PRIVACY_H_
