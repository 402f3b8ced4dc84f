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

#include "dprs/instance_io.h"

#include <fstream>
#include <sstream>

#include "dprs/errors.h"
#include "json.hpp"

namespace dprs {

namespace {

using nlohmann::ordered_json;

ordered_json MatrixJson(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    rows.push_back(Vector(row.begin(), row.end()));
  }
  return rows;
}

Matrix ParseMatrix(const ordered_json& j, std::size_t cols, const char* name) {
  if (!j.is_array()) {
    throw InvalidInputError(std::string(name) + " must be an array of rows");
  }
  Matrix m(0, cols);
  for (const auto& row : j) {
    Vector v = row.get<Vector>();
    if (v.size() != cols) {
      throw InvalidInputError(std::string(name) + " row length != n_k");
    }
    m.AppendRow(v);
  }
  return m;
}

}  // namespace

std::string InstanceToJson(const Instance& inst) {
  ordered_json j;
  j["m"] = inst.num_resources();
  j["c"] = inst.capacity;
  ordered_json parties = ordered_json::array();
  for (const PartyData& p : inst.parties) {
    ordered_json pj;
    pj["n_k"] = p.num_vars();
    pj["A_k"] = MatrixJson(p.usage);
    pj["B_k"] = MatrixJson(p.constraints);
    pj["b_k"] = p.rhs;
    pj["u_k"] = p.utility;
    pj["s_bar_k"] = p.claim_bound;
    if (p.layout) {
      pj["meta"] = {{"capacity_rows", p.layout->capacity_rows},
                    {"nonnegativity_rows", p.layout->nonnegativity_rows},
                    {"demand_rows", p.layout->demand_rows}};
    }
    parties.push_back(std::move(pj));
  }
  j["parties"] = std::move(parties);
  return j.dump(1) + "\n";
}

Instance InstanceFromJson(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInputError(std::string("instance JSON: ") + e.what());
  }
  try {
    Instance inst;
    inst.capacity = j.at("c").get<Vector>();
    const std::size_t m = j.value("m", inst.capacity.size());
    if (m != inst.capacity.size()) {
      throw InvalidInputError("instance JSON: m != len(c)");
    }
    for (const auto& pj : j.at("parties")) {
      PartyData p;
      p.utility = pj.at("u_k").get<Vector>();
      const std::size_t n = pj.value("n_k", p.utility.size());
      if (n != p.utility.size()) {
        throw InvalidInputError("instance JSON: n_k != len(u_k)");
      }
      p.usage = ParseMatrix(pj.at("A_k"), n, "A_k");
      p.constraints =
          pj.contains("B_k") ? ParseMatrix(pj.at("B_k"), n, "B_k") : Matrix(0, n);
      p.rhs = pj.value("b_k", Vector{});
      if (pj.contains("s_bar_k")) p.claim_bound = pj.at("s_bar_k").get<Vector>();
      if (pj.contains("meta")) {
        const auto& meta = pj.at("meta");
        p.layout = RowLayout{meta.value("capacity_rows", std::size_t{0}),
                             meta.value("nonnegativity_rows", std::size_t{0}),
                             meta.value("demand_rows", std::size_t{0})};
      }
      inst.parties.push_back(std::move(p));
    }
    DefaultClaimBounds(inst);
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError(std::string("instance JSON: ") + e.what());
  }
}

void WriteInstanceFile(const std::filesystem::path& path,
                       const Instance& inst) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInputError("cannot write " + path.string());
  out << InstanceToJson(inst);
}

Instance ReadInstanceFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return InstanceFromJson(buf.str());
}

}  // namespace dprs
