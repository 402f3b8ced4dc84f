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

#include "dprs/privacy.h"

#include <cmath>
#include <numbers>

#include "dprs/errors.h"
#include "dprs/rng.h"

namespace dprs {

const char* ToString(Regime regime) {
  return regime == Regime::kPure ? "pure" : "approx";
}

void PrivacyConfig::Validate() const {
  if (T < 1) throw InvalidInputError("privacy: T must be >= 1");
  if (!(epsilon > 0.0)) throw InvalidInputError("privacy: epsilon must be > 0");
  if (regime == Regime::kApprox) {
    if (!(epsilon < 0.9)) {
      throw InvalidInputError("privacy: approx regime needs epsilon in (0, 0.9)");
    }
    if (!(delta > 0.0 && delta <= 1.0)) {
      throw InvalidInputError("privacy: approx regime needs delta in (0, 1]");
    }
  }
}

double ApplyNorm(NormKind kind, std::span<const double> v) {
  return kind == NormKind::kEuclidean ? Norm2(v) : NormInf(v);
}

double PureScale(double delta_k, double eps, std::size_t T) {
  if (!(eps > 0.0)) throw InvalidInputError("pure scale: epsilon must be > 0");
  if (T < 1) throw InvalidInputError("pure scale: T must be >= 1");
  if (delta_k < 0.0) throw InvalidInputError("pure scale: negative Delta");
  return static_cast<double>(T) * delta_k / eps;
}

double ApproxScale(double bound_norm, double eps, double delta,
                   std::size_t T) {
  if (!(eps > 0.0 && eps < 0.9)) {
    throw InvalidInputError("approx scale: epsilon must be in (0, 0.9)");
  }
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw InvalidInputError("approx scale: delta must be in (0, 1]");
  }
  if (T < 1) throw InvalidInputError("approx scale: T must be >= 1");
  if (bound_norm < 0.0) throw InvalidInputError("approx scale: negative norm");
  return (2.0 * bound_norm / eps) *
         std::sqrt(static_cast<double>(T) *
                   std::log(std::numbers::e + eps / delta));
}

double PartyNoiseScale(const PrivacyConfig& config, const PartyData& party) {
  if (config.regime == Regime::kPure) {
    return PureScale(Sensitivity(party), config.epsilon, config.T);
  }
  return ApproxScale(ApplyNorm(config.bound_norm, party.claim_bound),
                     config.epsilon, config.delta, config.T);
}

double LaplaceQuantile(double u, double scale) {
  return u < 0.5 ? scale * std::log(2.0 * u)
                 : -scale * std::log(2.0 * (1.0 - u));
}

Vector SampleLaplace(const NoiseStream& stream, std::size_t dim) {
  Vector out(dim, 0.0);
  if (stream.scale == 0.0) return out;
  CounterRng rng(DeriveKey(stream.seed, {0x6e6f697365ULL, stream.party,
                                         stream.iteration}));
  for (double& v : out) v = LaplaceQuantile(rng.UniformOpen01(), stream.scale);
  return out;
}

double PerReleaseEpsilon(const PrivacyConfig& config) {
  const double T = static_cast<double>(config.T);
  if (config.regime == Regime::kPure) return config.epsilon / T;
  // A release with bound ||s_bar_k|| and the approximate-regime scale is a
  // Laplace mechanism with epsilon ||s_bar_k|| / scale.
  return config.epsilon /
         (2.0 * std::sqrt(T * std::log(std::numbers::e +
                                       config.epsilon / config.delta)));
}

PrivacyLoss PrivacySpent(const PrivacyConfig& config,
                         std::size_t iterations_run) {
  if (iterations_run > config.T) throw BudgetExhaustedError();
  const double per_release = PerReleaseEpsilon(config);
  const double basic = static_cast<double>(iterations_run) * per_release;
  if (config.regime == Regime::kPure) {
    return {static_cast<double>(iterations_run) * config.epsilon /
                static_cast<double>(config.T),
            0.0};
  }
  if (iterations_run == config.T || basic >= config.epsilon) {
    return {config.epsilon, config.delta};
  }
  return {basic, 0.0};
}

PrivacyAccountant::PrivacyAccountant(PrivacyConfig config)
    : config_(config) {
  config_.Validate();
}

void PrivacyAccountant::RecordIteration() {
  if (iterations_ >= config_.T) throw BudgetExhaustedError();
  ++iterations_;
}

}  // namespace dprs
