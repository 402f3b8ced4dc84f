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

#include "dprs/synthgen.h"

#include <algorithm>
#include <cmath>

#include "dprs/errors.h"
#include "dprs/oracle.h"
#include "dprs/rng.h"
#include "json.hpp"

namespace dprs {

namespace {

enum StreamTag : std::uint64_t {
  kShapeTag = 1,
  kCapacityTag = 2,
  kPartyTag = 3,
  kDemandTag = 4,
  kSplitTag = 5,
};

using nlohmann::ordered_json;

template <typename Range>
Range ParseRange(const ordered_json& j, const char* key) {
  if (!j.is_array() || j.size() != 2) {
    throw InvalidInputError(std::string("params: ") + key +
                            " must be [lo, hi]");
  }
  using T = decltype(Range{}.lo);
  Range r{j[0].get<T>(), j[1].get<T>()};
  if (r.hi < r.lo) {
    throw InvalidInputError(std::string("params: ") + key + " has hi < lo");
  }
  return r;
}

}  // namespace

GeneratorParams ParamsFromJson(const std::string& text) {
  GeneratorParams p;
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInputError(std::string("params JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidInputError("params JSON must be an object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "parties") p.parties = value.get<std::size_t>();
      else if (key == "resources") p.resources = value.get<std::size_t>();
      else if (key == "private_capacities")
        p.private_capacities = ParseRange<IntRange>(value, "private_capacities");
      else if (key == "products") p.products = ParseRange<IntRange>(value, "products");
      else if (key == "capacity") p.capacity = ParseRange<RealRange>(value, "capacity");
      else if (key == "private_rhs")
        p.private_rhs = ParseRange<RealRange>(value, "private_rhs");
      else if (key == "usage") p.usage = ParseRange<RealRange>(value, "usage");
      else if (key == "private_coeff")
        p.private_coeff = ParseRange<RealRange>(value, "private_coeff");
      else if (key == "utility") p.utility = ParseRange<RealRange>(value, "utility");
      else if (key == "demands") p.demands = value.get<bool>();
      else if (key == "demand_low") p.demand_low = value.get<double>();
      else if (key == "demand_high") p.demand_high = value.get<double>();
      else if (key == "demand_floor") p.demand_floor = value.get<double>();
      else throw InvalidInputError("params: unknown key " + key);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError(std::string("params JSON: ") + e.what());
  }
  if (p.parties < 1 || p.resources < 1) {
    throw InvalidInputError("params: parties and resources must be >= 1");
  }
  if (p.products.lo < 1 || p.private_capacities.lo < 0) {
    throw InvalidInputError("params: product/capacity counts out of range");
  }
  return p;
}

std::string ParamsToJson(const GeneratorParams& p) {
  ordered_json j;
  j["parties"] = p.parties;
  j["resources"] = p.resources;
  j["private_capacities"] = {p.private_capacities.lo, p.private_capacities.hi};
  j["products"] = {p.products.lo, p.products.hi};
  j["capacity"] = {p.capacity.lo, p.capacity.hi};
  j["private_rhs"] = {p.private_rhs.lo, p.private_rhs.hi};
  j["usage"] = {p.usage.lo, p.usage.hi};
  j["private_coeff"] = {p.private_coeff.lo, p.private_coeff.hi};
  j["utility"] = {p.utility.lo, p.utility.hi};
  j["demands"] = p.demands;
  j["demand_low"] = p.demand_low;
  j["demand_high"] = p.demand_high;
  j["demand_floor"] = p.demand_floor;
  return j.dump(1) + "\n";
}

Instance Generate(std::uint64_t seed, const GeneratorParams& params) {
  const std::size_t m = params.resources;
  Instance inst;
  CounterRng cap_rng(DeriveKey(seed, {kCapacityTag}));
  inst.capacity.resize(m);
  for (double& c : inst.capacity) {
    c = cap_rng.Uniform(params.capacity.lo, params.capacity.hi);
  }
  CounterRng shape_rng(DeriveKey(seed, {kShapeTag}));
  for (std::size_t k = 0; k < params.parties; ++k) {
    const auto n_caps = static_cast<std::size_t>(shape_rng.UniformInt(
        params.private_capacities.lo, params.private_capacities.hi));
    const auto n = static_cast<std::size_t>(
        shape_rng.UniformInt(params.products.lo, params.products.hi));
    CounterRng rng(DeriveKey(seed, {kPartyTag, k}));
    PartyData p;
    p.usage = Matrix(m, n);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        p.usage(i, j) = rng.Uniform(params.usage.lo, params.usage.hi);
      }
    }
    p.constraints = Matrix(0, n);
    Vector row(n);
    for (std::size_t r = 0; r < n_caps; ++r) {
      for (double& v : row) {
        v = rng.Uniform(params.private_coeff.lo, params.private_coeff.hi);
      }
      p.constraints.AppendRow(row);
      p.rhs.push_back(rng.Uniform(params.private_rhs.lo, params.private_rhs.hi));
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(row.begin(), row.end(), 0.0);
      row[j] = -1.0;
      p.constraints.AppendRow(row);
      p.rhs.push_back(0.0);
    }
    p.utility.resize(n);
    for (double& u : p.utility) {
      u = rng.Uniform(params.utility.lo, params.utility.hi);
    }
    p.claim_bound = inst.capacity;
    p.layout = RowLayout{n_caps, n, 0};
    inst.parties.push_back(std::move(p));
  }
  if (params.demands) return AttachDemands(inst, seed, params);
  return inst;
}

Instance AttachDemands(const Instance& inst, std::uint64_t seed,
                       const GeneratorParams& params) {
  const CentralizedSolution free_opt = SolveCentralized(inst);
  Instance out = inst;
  for (std::size_t k = 0; k < out.num_parties(); ++k) {
    PartyData& p = out.parties[k];
    const std::size_t n = p.num_vars();
    CounterRng rng(DeriveKey(seed, {kDemandTag, k}));
    Vector row(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double anchor = std::max(free_opt.x[k][j], params.demand_floor);
      std::fill(row.begin(), row.end(), 0.0);
      row[j] = 1.0;
      p.constraints.AppendRow(row);
      p.rhs.push_back(rng.Uniform(params.demand_low * anchor,
                                  params.demand_high * anchor));
    }
    RowLayout layout = p.layout.value_or(RowLayout{});
    layout.demand_rows += n;
    p.layout = layout;
  }
  return out;
}

Instance ScenarioBounds(const Instance& inst, double share, double market,
                        std::uint64_t seed) {
  const std::size_t K = inst.num_parties();
  const std::size_t m = inst.num_resources();
  if (K == 0) throw InvalidInputError("scenario: instance has no parties");
  if (!(share >= 0.0 && share <= 1.0)) {
    throw InvalidInputError("scenario: party-1 share must lie in [0, 1]");
  }
  Instance out = inst;
  if (market == static_cast<double>(K)) {
    for (PartyData& p : out.parties) p.claim_bound = inst.capacity;
    return out;
  }
  const double rest = market - share;
  if (rest < 0.0) throw InvalidInputError("scenario: market below share");
  if (rest > static_cast<double>(K - 1)) {
    throw InvalidInputError("scenario: market cannot be split without s_bar > c");
  }
  if (K == 1 && rest > 0.0) {
    throw InvalidInputError("scenario: single party must have market == share");
  }
  for (std::size_t i = 0; i < m; ++i) {
    out.parties[0].claim_bound[i] = share * inst.capacity[i];
  }
  if (K == 1) return out;
  CounterRng rng(DeriveKey(seed, {kSplitTag}));
  Vector w(K - 1);
  for (std::size_t i = 0; i < m; ++i) {
    // Redraw until no party's share of the remaining mass exceeds c.
    while (true) {
      double total = 0.0;
      for (double& v : w) {
        v = rng.UniformOpen01();
        total += v;
      }
      bool ok = true;
      for (double& v : w) {
        v = v / total * rest;
        if (v > 1.0) ok = false;
      }
      if (ok) break;
    }
    for (std::size_t k = 1; k < K; ++k) {
      out.parties[k].claim_bound[i] = w[k - 1] * inst.capacity[i];
    }
  }
  return out;
}

}  // namespace dprs
