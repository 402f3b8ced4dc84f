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

// Small instances shared by several tests.

#ifndef DPRS_TESTS_SUPPORT_FIXTURES_H_
#define DPRS_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>

#include "brute_force.h"
#include "dprs/model.h"
#include "dprs/synthgen.h"

namespace dprs_test {

// K=1, m=1, c=[2], u=[3], A=[[1]], 0 <= x <= 10, s_bar=[2]. Z_P = 6.
inline dprs::Instance OnePartyInstance() {
  dprs::Instance inst;
  inst.capacity = {2.0};
  dprs::PartyData p;
  p.usage = dprs::Matrix::FromRows({{1.0}}, 1);
  p.constraints = dprs::Matrix::FromRows({{1.0}, {-1.0}}, 1);
  p.rhs = {10.0, 0.0};
  p.utility = {3.0};
  p.claim_bound = {2.0};
  inst.parties.push_back(p);
  return inst;
}

// K=2, m=2, n_k=2, at most two private capacity rows per party.
inline dprs::GeneratorParams TinyParams() {
  dprs::GeneratorParams p;
  p.parties = 2;
  p.resources = 2;
  p.products = {2, 2};
  p.private_capacities = {1, 2};
  return p;
}

// The allotment form of an instance as a vertex-enumeration problem over
// [x_1 .. x_K | s_1 .. s_K].
inline BruteLp AllotmentLp(const dprs::Instance& inst) {
  const std::size_t m = inst.num_resources();
  const std::size_t K = inst.num_parties();
  std::size_t nx = 0;
  for (const auto& p : inst.parties) nx += p.num_vars();
  const std::size_t n = nx + K * m;
  BruteLp lp;
  lp.c.assign(n, 0.0);
  std::size_t xo = 0;
  for (std::size_t k = 0; k < K; ++k) {
    const dprs::PartyData& p = inst.parties[k];
    const std::size_t so = nx + k * m;
    for (std::size_t j = 0; j < p.num_vars(); ++j) lp.c[xo + j] = p.utility[j];
    for (std::size_t r = 0; r < p.num_private(); ++r) {
      Vec row(n, 0.0);
      for (std::size_t j = 0; j < p.num_vars(); ++j) row[xo + j] = p.constraints(r, j);
      lp.G.push_back(row);
      lp.h.push_back(p.rhs[r]);
    }
    for (std::size_t i = 0; i < m; ++i) {
      Vec row(n, 0.0);
      for (std::size_t j = 0; j < p.num_vars(); ++j) row[xo + j] = p.usage(i, j);
      row[so + i] = -1.0;
      lp.G.push_back(row);
      lp.h.push_back(0.0);
      Vec lo(n, 0.0), hi(n, 0.0);
      lo[so + i] = -1.0;
      hi[so + i] = 1.0;
      lp.G.push_back(lo);
      lp.h.push_back(0.0);
      lp.G.push_back(hi);
      lp.h.push_back(p.claim_bound[i]);
    }
    xo += p.num_vars();
  }
  for (std::size_t i = 0; i < m; ++i) {
    Vec row(n, 0.0);
    for (std::size_t k = 0; k < K; ++k) row[nx + k * m + i] = 1.0;
    lp.E.push_back(row);
    lp.e.push_back(inst.capacity[i]);
  }
  return lp;
}

}  // namespace dprs_test

#endif  // DPRS_TESTS_SUPPORT_FIXTURES_H_
