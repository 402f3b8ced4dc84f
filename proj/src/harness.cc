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

#include "dprs/harness.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dprs/errors.h"
#include "dprs/oracle.h"
#include "dprs/rng.h"
#include "dprs/trace_io.h"
#include "json.hpp"

namespace dprs {

namespace {

constexpr std::uint64_t kSplitStream = 0x73706c6974ULL;

PrivacyConfig PrivacyFor(const SweepSpec& spec, double epsilon, double delta) {
  PrivacyConfig p;
  p.regime = spec.mode == Mode::kPureDp ? Regime::kPure : Regime::kApprox;
  p.epsilon = epsilon;
  p.delta = spec.mode == Mode::kPureDp ? 0.0 : delta;
  p.T = spec.T;
  p.bound_norm = spec.norm;
  return p;
}

}  // namespace

GapStats Summarize(std::span<const double> values) {
  if (values.empty()) throw InvalidInputError("summarize: no values");
  GapStats s;
  s.min = std::numeric_limits<double>::infinity();
  s.max = -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (double v : values) {
    sum += v;
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
  }
  s.mean = sum / static_cast<double>(values.size());
  return s;
}

std::uint64_t RunSeed(std::uint64_t seed, std::size_t run) {
  return DeriveKey(seed, {static_cast<std::uint64_t>(run)});
}

std::uint64_t ScenarioSeed(std::uint64_t run_seed, std::size_t share_index) {
  return DeriveKey(run_seed, {kSplitStream, share_index});
}

const SweepCell* SweepResult::Find(double epsilon, double delta, double share,
                                   double market) const {
  for (const SweepCell& c : cells) {
    if (c.epsilon == epsilon && c.delta == delta && c.share == share &&
        c.market == market) {
      return &c;
    }
  }
  return nullptr;
}

std::string SweepResult::ToCsv() const {
  std::size_t K = 0;
  for (const SweepCell& c : cells) K = std::max(K, c.mean_received.size());
  std::string out =
      "epsilon,delta,share,market,runs,mean_gap_pct,min_gap_pct,max_gap_pct,"
      "mean_overflow_l1";
  for (std::size_t k = 1; k <= K; ++k) out += ",received_" + std::to_string(k);
  out += '\n';
  for (const SweepCell& c : cells) {
    out += FormatReal(c.epsilon) + ',' + FormatReal(c.delta) + ',' +
           FormatReal(c.share) + ',' + FormatReal(c.market) + ',' +
           std::to_string(c.run_gaps.size()) + ',' + FormatReal(c.gap.mean) +
           ',' + FormatReal(c.gap.min) + ',' + FormatReal(c.gap.max) + ',' +
           FormatReal(c.mean_overflow_l1);
    for (double r : c.mean_received) out += ',' + FormatReal(r);
    out += '\n';
  }
  return out;
}

SweepResult RunSweep(const SweepSpec& spec, std::ostream* progress) {
  if (spec.mode == Mode::kDataHiding) {
    throw InvalidInputError("sweep: needs a private mode");
  }
  if (spec.runs == 0) throw InvalidInputError("sweep: runs must be >= 1");
  const std::vector<double> deltas =
      spec.mode == Mode::kPureDp ? std::vector<double>{0.0} : spec.deltas;
  const std::size_t K = spec.params.parties;

  SweepResult result;
  for (double market : spec.markets) {
    for (double share : spec.shares) {
      for (double delta : deltas) {
        for (double eps : spec.epsilons) {
          SweepCell cell;
          cell.epsilon = eps;
          cell.delta = delta;
          cell.share = share;
          cell.market = market;
          cell.mean_received.assign(K, 0.0);
          cell.min_received.assign(K, std::numeric_limits<double>::infinity());
          cell.max_received.assign(K, -std::numeric_limits<double>::infinity());
          result.cells.push_back(std::move(cell));
        }
      }
    }
  }
  for (double eps : spec.epsilons) {
    for (double delta : deltas) PrivacyFor(spec, eps, delta).Validate();
  }

  for (std::size_t r = 0; r < spec.runs; ++r) {
    const std::uint64_t run_seed = RunSeed(spec.seed, r);
    const Instance base = Generate(run_seed, spec.params);
    std::size_t cell_index = 0;
    for (double market : spec.markets) {
      for (std::size_t si = 0; si < spec.shares.size(); ++si) {
        const Instance inst = ScenarioBounds(
            base, spec.shares[si], market, ScenarioSeed(run_seed, si));
        const double z_p = SolveCentralized(inst).value;
        for (double delta : deltas) {
          for (double eps : spec.epsilons) {
            RunConfig config;
            config.mode = spec.mode;
            config.privacy = PrivacyFor(spec, eps, delta);
            config.step = spec.step;
            config.max_iters = spec.T;
            config.seed = run_seed;
            config.reference_value = z_p;
            const RunTrace trace = Run(inst, config);
            SweepCell& cell = result.cells[cell_index++];
            cell.run_gaps.push_back(trace.best.gap_pct);
            cell.mean_overflow_l1 += Norm1(trace.best.overflow);
            for (std::size_t k = 0; k < K; ++k) {
              const double f = trace.best.received_fraction[k];
              cell.mean_received[k] += f;
              cell.min_received[k] = std::min(cell.min_received[k], f);
              cell.max_received[k] = std::max(cell.max_received[k], f);
            }
          }
        }
      }
    }
    if (progress) *progress << "sweep run " << (r + 1) << "/" << spec.runs << "\n";
  }

  const double n = static_cast<double>(spec.runs);
  for (SweepCell& cell : result.cells) {
    cell.gap = Summarize(cell.run_gaps);
    cell.mean_overflow_l1 /= n;
    for (double& v : cell.mean_received) v /= n;
  }
  return result;
}

std::vector<double> BestSoFarGap(const RunTrace& trace) {
  if (!trace.reference_value) {
    throw InvalidInputError("best-so-far gap needs a reference value");
  }
  std::vector<double> out;
  out.reserve(trace.records.size());
  double best = std::numeric_limits<double>::infinity();
  for (const IterateRecord& r : trace.records) {
    best = std::min(best, r.dual_value);
    out.push_back(GapPct(best, *trace.reference_value));
  }
  return out;
}

std::string ConvergenceResult::ToCsv() const {
  std::string out = "t,mean_gap_pct,min_gap_pct,max_gap_pct\n";
  for (std::size_t t = 0; t < mean.size(); ++t) {
    out += std::to_string(t + 1) + ',' + FormatReal(mean[t]) + ',' +
           FormatReal(min[t]) + ',' + FormatReal(max[t]) + '\n';
  }
  return out;
}

ConvergenceResult RunConvergence(const ConvergenceSpec& spec,
                                 std::ostream* progress) {
  if (spec.runs == 0 || spec.iters == 0) {
    throw InvalidInputError("convergence: runs and iters must be >= 1");
  }
  ConvergenceResult out;
  out.mean.assign(spec.iters, 0.0);
  out.min.assign(spec.iters, std::numeric_limits<double>::infinity());
  out.max.assign(spec.iters, -std::numeric_limits<double>::infinity());
  for (std::size_t r = 0; r < spec.runs; ++r) {
    const std::uint64_t run_seed = RunSeed(spec.seed, r);
    const Instance inst = Generate(run_seed, spec.params);
    RunConfig config;
    config.mode = Mode::kDataHiding;
    config.step = spec.step;
    config.max_iters = spec.iters;
    config.seed = run_seed;
    config.reference_value = SolveCentralized(inst).value;
    const std::vector<double> gaps = BestSoFarGap(Run(inst, config));
    for (std::size_t t = 0; t < spec.iters; ++t) {
      out.mean[t] += gaps[t];
      out.min[t] = std::min(out.min[t], gaps[t]);
      out.max[t] = std::max(out.max[t], gaps[t]);
    }
    out.final_gaps.push_back(gaps.back());
    if (progress) {
      *progress << "convergence run " << (r + 1) << "/" << spec.runs << "\n";
    }
  }
  for (double& v : out.mean) v /= static_cast<double>(spec.runs);
  return out;
}

void JsonlMessageLog::OnPrice(std::size_t party, const PriceMessage& message) {
  nlohmann::ordered_json j;
  j["dir"] = "price";
  j["party"] = party;
  j["t"] = message.t;
  j["lambda"] = message.lambda;
  out_ << j.dump() << '\n';
}

void JsonlMessageLog::OnAllotment(std::size_t party,
                                  const AllotmentMessage& message) {
  nlohmann::ordered_json j;
  j["dir"] = "allotment";
  j["party"] = party;
  j["t"] = message.t;
  j["released"] = message.released;
  out_ << j.dump() << '\n';
}

}  // namespace dprs
