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

// Experiment drivers: the private-parameter sweep, the data-hiding
// convergence study and a released-message log.
//
// Run r of an experiment uses the seed DeriveKey(seed, {r}) for its base
// instance and for its noise, so every grid cell and every market sees
// the same instances and noise streams. The split of the remaining claim
// mass depends on the run and the party-1 share, not on the market.

#ifndef DPRS_HARNESS_H_
#define DPRS_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "dprs/coordinator.h"
#include "dprs/synthgen.h"

namespace dprs {

struct GapStats {
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};

GapStats Summarize(std::span<const double> values);

std::uint64_t RunSeed(std::uint64_t seed, std::size_t run);
// Seed of the claim-bound split for the share at share_index.
std::uint64_t ScenarioSeed(std::uint64_t run_seed, std::size_t share_index);

struct SweepSpec {
  GeneratorParams params;
  std::vector<double> epsilons{0.05, 0.10, 0.15, 0.20, 0.25};
  std::vector<double> deltas{0.05, 0.10, 0.15, 0.20};  // ignored when pure
  std::vector<double> shares{0.50, 0.30, 0.15};
  // A value equal to the number of parties selects s_bar_k = c for all k.
  std::vector<double> markets{1.2};
  std::size_t runs = 100;
  std::size_t T = 100;
  std::uint64_t seed = 0;
  Mode mode = Mode::kApproxDp;
  StepScheme step = Diminishing{1.0};
  NormKind norm = NormKind::kEuclidean;
};

struct SweepCell {
  double epsilon = 0.0;
  double delta = 0.0;
  double share = 0.0;
  double market = 0.0;
  GapStats gap;
  Vector mean_received;  // per party
  Vector min_received;
  Vector max_received;
  double mean_overflow_l1 = 0.0;
  std::vector<double> run_gaps;  // best-iterate gap_pct of each run
};

struct SweepResult {
  std::vector<SweepCell> cells;  // market, share, delta, epsilon order

  const SweepCell* Find(double epsilon, double delta, double share,
                        double market) const;
  // epsilon,delta,share,market,runs,mean_gap_pct,min_gap_pct,max_gap_pct,
  // mean_overflow_l1,received_1..received_K
  std::string ToCsv() const;
};

SweepResult RunSweep(const SweepSpec& spec, std::ostream* progress = nullptr);

struct ConvergenceSpec {
  GeneratorParams params;
  std::size_t runs = 100;
  std::size_t iters = 1000;
  std::uint64_t seed = 0;
  StepScheme step = Diminishing{1.0};
};

struct ConvergenceResult {
  // Best-so-far dual gap in percent, across runs, per iteration.
  std::vector<double> mean;
  std::vector<double> min;
  std::vector<double> max;
  std::vector<double> final_gaps;  // per run

  // t,mean_gap_pct,min_gap_pct,max_gap_pct
  std::string ToCsv() const;
};

ConvergenceResult RunConvergence(const ConvergenceSpec& spec,
                                 std::ostream* progress = nullptr);

// Best-so-far gap_pct per iteration of one trace.
std::vector<double> BestSoFarGap(const RunTrace& trace);

// One JSON object per message crossing the party boundary:
//   {"dir":"price","party":k,"t":t,"lambda":[...]}
//   {"dir":"allotment","party":k,"t":t,"released":[...]}
class JsonlMessageLog : public MessageObserver {
 public:
  explicit JsonlMessageLog(std::ostream& out) : out_(out) {}

  void OnPrice(std::size_t party, const PriceMessage& message) override;
  void OnAllotment(std::size_t party, const AllotmentMessage& message) override;

 private:
  std::ostream& out_;
};

}  // namespace dprs

#endif  // DPRS_HARNESS_H_
