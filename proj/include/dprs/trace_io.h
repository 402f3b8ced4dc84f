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

// RunTrace serialization.
//
// CSV: header "t,dual_value,primal_surrogate,gap_pct,overflow_l1,lambda_norm"
// and one row per iteration. Reals use %.12g; a missing reference gives
// gap_pct "nan". lambda_norm is the Euclidean norm of the broadcast prices.
// The JSON summary carries the best iterate, overflow statistics, the
// privacy spend, the per-party noise scales and optional bound values.

#ifndef DPRS_TRACE_IO_H_
#define DPRS_TRACE_IO_H_

#include <filesystem>
#include <optional>
#include <string>

#include "dprs/coordinator.h"

namespace dprs {

// %.12g.
std::string FormatReal(double v);

std::string TraceToCsv(const RunTrace& trace);

struct BoundReport {
  double M = 0.0;
  double sigma = 0.0;
  double s_bar_total_norm = 0.0;
  std::optional<double> pure;
  std::optional<double> approx;
};

struct SummaryOptions {
  std::optional<PrivacyConfig> privacy;
  std::optional<BoundReport> bounds;
  std::uint64_t seed = 0;
};

std::string SummaryToJson(const RunTrace& trace,
                          const SummaryOptions& options = {});

void WriteTextFile(const std::filesystem::path& path, const std::string& text);
std::string ReadTextFile(const std::filesystem::path& path);

}  // namespace dprs

#endif  // DPRS_TRACE_IO_H_
