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

#include "dprs/trace_io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dprs/errors.h"
#include "json.hpp"

namespace dprs {

namespace {

using nlohmann::ordered_json;

// Rounded to 12 significant digits; NaN and infinities become null.
ordered_json Num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::stod(FormatReal(v));
}

ordered_json NumArray(std::span<const double> v) {
  ordered_json out = ordered_json::array();
  for (double x : v) out.push_back(Num(x));
  return out;
}

}  // namespace

std::string FormatReal(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string TraceToCsv(const RunTrace& trace) {
  std::string out = "t,dual_value,primal_surrogate,gap_pct,overflow_l1,lambda_norm\n";
  for (const IterateRecord& r : trace.records) {
    const double gap = trace.reference_value
                           ? GapPct(r.dual_value, *trace.reference_value)
                           : std::nan("");
    out += std::to_string(r.t);
    out += ',';
    out += FormatReal(r.dual_value);
    out += ',';
    out += FormatReal(r.primal_surrogate);
    out += ',';
    out += FormatReal(gap);
    out += ',';
    out += FormatReal(Norm1(r.overflow));
    out += ',';
    out += FormatReal(Norm2(r.lambda_before));
    out += '\n';
  }
  return out;
}

std::string SummaryToJson(const RunTrace& trace, const SummaryOptions& options) {
  ordered_json j;
  j["mode"] = ToString(trace.mode);
  j["seed"] = options.seed;
  j["iterations"] = trace.records.size();
  if (trace.reference_value) {
    j["reference_value"] = Num(*trace.reference_value);
  } else {
    j["reference_value"] = nullptr;
  }
  if (!trace.records.empty()) {
    const BestIterate& b = trace.best;
    ordered_json best;
    best["t"] = b.t;
    best["dual_value"] = Num(b.dual_value);
    best["gap_pct"] = Num(b.gap_pct);
    best["received_fraction"] = NumArray(b.received_fraction);
    best["overflow"] = NumArray(b.overflow);
    best["overflow_l1"] = Num(Norm1(b.overflow));
    ordered_json allot = ordered_json::array();
    for (const Vector& s : b.allotments) allot.push_back(NumArray(s));
    best["allotments"] = std::move(allot);
    j["best"] = std::move(best);

    double sum = 0.0, peak = 0.0;
    std::size_t nonzero = 0;
    for (const IterateRecord& r : trace.records) {
      const double o = Norm1(r.overflow);
      sum += o;
      peak = std::max(peak, o);
      if (o > 0.0) ++nonzero;
    }
    ordered_json overflow;
    overflow["mean_l1"] = Num(sum / static_cast<double>(trace.records.size()));
    overflow["max_l1"] = Num(peak);
    overflow["final_l1"] = Num(Norm1(trace.records.back().overflow));
    overflow["iterations_with_overflow"] = nonzero;
    j["overflow"] = std::move(overflow);
  }
  if (options.privacy && trace.mode != Mode::kDataHiding) {
    const PrivacyConfig& p = *options.privacy;
    ordered_json priv;
    priv["regime"] = ToString(p.regime);
    priv["epsilon"] = Num(p.epsilon);
    priv["delta"] = Num(p.delta);
    priv["T"] = p.T;
    priv["spent_epsilon"] = Num(trace.privacy_spent.epsilon);
    priv["spent_delta"] = Num(trace.privacy_spent.delta);
    j["privacy"] = std::move(priv);
  }
  j["noise_scales"] = NumArray(trace.noise_scales);
  if (options.bounds) {
    const BoundReport& b = *options.bounds;
    ordered_json bounds;
    bounds["M"] = Num(b.M);
    bounds["sigma"] = Num(b.sigma);
    bounds["s_bar_total_norm"] = Num(b.s_bar_total_norm);
    bounds["pure"] = b.pure ? Num(*b.pure) : ordered_json(nullptr);
    bounds["approx"] = b.approx ? Num(*b.approx) : ordered_json(nullptr);
    j["bounds"] = std::move(bounds);
  }
  return j.dump(1) + "\n";
}

void WriteTextFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInputError("cannot write " + path.string());
  out << text;
  if (!out) throw InvalidInputError("write failed: " + path.string());
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace dprs
