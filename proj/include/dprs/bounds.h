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

// Suboptimality bounds on min_t E[L(x^(t+1), s^(t+1), lambda^(t)) - Z_P]
// after T private iterations with the constant step M / (B sqrt(T)):
//   pure:   M sqrt(2 T sigma / eps^2 + ||s_bar_K||^2 / T)
//   approx: M sqrt(8 ln(e + eps / delta) sigma / eps^2 + ||s_bar_K||^2 / T)
// with sigma = sum_k ||s_bar_k||^2 and s_bar_K = sum_k s_bar_k.

#ifndef DPRS_BOUNDS_H_
#define DPRS_BOUNDS_H_

#include <cstddef>

#include "dprs/model.h"
#include "dprs/privacy.h"

namespace dprs {

struct BoundInputs {
  double M = 0.0;
  double sigma = 0.0;
  double s_bar_total_norm = 0.0;
  std::size_t T = 1;
  double epsilon = 1.0;
  double delta = 0.0;

  void Validate() const;
};

// sigma and ||s_bar_K|| from the instance's claim bounds.
BoundInputs MakeBoundInputs(const Instance& inst, double M, std::size_t T,
                            double epsilon, double delta,
                            NormKind norm = NormKind::kEuclidean);

double PureBound(const BoundInputs& in);
double ApproxBound(const BoundInputs& in);

}  // namespace dprs

#endif  // DPRS_BOUNDS_H_
