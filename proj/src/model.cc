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

#include "dprs/model.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dprs/errors.h"

namespace dprs {

Matrix Matrix::FromRows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(0, cols);
  for (const Vector& r : rows) {
    if (r.size() != cols) {
      throw InvalidInputError("matrix row has inconsistent length");
    }
    m.AppendRow(r);
  }
  return m;
}

void Matrix::AppendRow(std::span<const double> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) {
    throw InvalidInputError("appended row has wrong length");
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Vector Matrix::Multiply(std::span<const double> x) const {
  if (x.size() != cols_) throw InvalidInputError("matrix-vector mismatch");
  Vector y(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) y[r] = Dot(row(r), x);
  return y;
}

std::vector<Vector> Matrix::ToRows() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto rr = row(r);
    out.emplace_back(rr.begin(), rr.end());
  }
  return out;
}

bool ValidationReport::Has(std::string_view code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

std::string ValidationReport::Summary() const {
  if (ok()) return "pass";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].message;
  }
  return os.str();
}

namespace {

void Add(ValidationReport& report, const char* code, std::string message,
         std::optional<std::size_t> party = std::nullopt,
         std::optional<std::size_t> index = std::nullopt) {
  std::ostringstream os;
  os << message;
  if (party) os << " (party " << *party;
  if (party && index) os << ", index " << *index;
  if (!party && index) os << " (index " << *index;
  if (party || index) os << ")";
  report.violations.push_back({code, os.str(), party, index});
}

bool AllFinite(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(),
                     [](double x) { return std::isfinite(x); });
}

}  // namespace

ValidationReport ValidateInstance(const Instance& inst) {
  ValidationReport report;
  const std::size_t m = inst.num_resources();
  if (inst.parties.empty()) Add(report, kNoParties, "instance has no parties");
  if (!AllFinite(inst.capacity)) Add(report, kNonFinite, "c not finite");
  for (std::size_t i = 0; i < m; ++i) {
    if (inst.capacity[i] < 0) {
      Add(report, kNegativeCapacity, "c negative", std::nullopt, i);
    }
  }
  for (std::size_t k = 0; k < inst.parties.size(); ++k) {
    const PartyData& p = inst.parties[k];
    const std::size_t n = p.num_vars();
    if (p.usage.rows() != m || p.usage.cols() != n) {
      Add(report, kDimensionMismatch, "A_k must be m x n_k", k);
    }
    if (p.constraints.rows() != p.rhs.size() ||
        (p.constraints.rows() > 0 && p.constraints.cols() != n)) {
      Add(report, kDimensionMismatch, "B_k must be m_k x n_k matching b_k", k);
    }
    if (p.claim_bound.size() != m) {
      Add(report, kDimensionMismatch, "s_bar_k must have length m", k);
      continue;
    }
    if (!AllFinite(p.utility) || !AllFinite(p.rhs) ||
        !AllFinite(p.claim_bound)) {
      Add(report, kNonFinite, "party data not finite", k);
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (p.claim_bound[i] < 0) {
        Add(report, kBoundNegative, "s_bar negative", k, i);
      } else if (p.claim_bound[i] > inst.capacity[i]) {
        Add(report, kBoundExceedsCapacity, "s_bar exceeds c", k, i);
      }
    }
  }
  return report;
}

void DefaultClaimBounds(Instance& inst) {
  for (PartyData& p : inst.parties) {
    if (p.claim_bound.empty()) p.claim_bound = inst.capacity;
  }
}

double Sensitivity(const PartyData& party) {
  return NormInf(party.claim_bound);
}

double TotalUtility(const Instance& inst, std::span<const Vector> decisions) {
  if (decisions.size() != inst.num_parties()) {
    throw InvalidInputError("one decision vector per party required");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < decisions.size(); ++k) {
    if (decisions[k].size() != inst.parties[k].num_vars()) {
      throw InvalidInputError("decision vector length differs from n_k");
    }
    total += Dot(inst.parties[k].utility, decisions[k]);
  }
  return total;
}

ValidationReport CheckAllotments(const Instance& inst,
                                 const AllotmentBundle& bundle,
                                 bool check_upper, double tol) {
  ValidationReport report;
  if (bundle.allotments.size() != inst.num_parties()) {
    Add(report, kDimensionMismatch, "one allotment per party required");
    return report;
  }
  for (std::size_t k = 0; k < inst.num_parties(); ++k) {
    const Vector& s = bundle.allotments[k];
    const Vector& bound = inst.parties[k].claim_bound;
    if (s.size() != inst.num_resources()) {
      Add(report, kDimensionMismatch, "allotment must have length m", k);
      continue;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < -tol) Add(report, "s-negative", "allotment negative", k, i);
      if (check_upper && s[i] > bound[i] + tol) {
        Add(report, "s-exceeds-s-bar", "allotment exceeds s_bar", k, i);
      }
    }
  }
  return report;
}

double NormInf(std::span<const double> v) {
  double r = 0.0;
  for (double x : v) r = std::max(r, std::abs(x));
  return r;
}

double Norm1(std::span<const double> v) {
  double r = 0.0;
  for (double x : v) r += std::abs(x);
  return r;
}

double Norm2(std::span<const double> v) { return std::sqrt(Dot(v, v)); }

double Dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InvalidInputError("dot: length mismatch");
  double r = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

}  // namespace dprs
