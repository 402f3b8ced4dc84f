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

// Problem data for multi-party shared-resource allocation.
//
// Party k owns decision variables x_k in R^{n_k} and the private dataset
//   usage       A_k in R^{m x n_k}    shared-resource coefficients
//   constraints B_k in R^{m_k x n_k}  private constraint matrix
//   rhs         b_k in R^{m_k}
//   utility     u_k in R^{n_k}
// together with a claim bound s_bar_k in R^m (0 <= s_bar_k <= c). The joint
// program is
//   maximize  sum_k u_k' x_k
//   s.t.      sum_k A_k x_k <= c,   B_k x_k <= b_k  for every k.
// Variables are free; nonnegativity is expressed as rows of B_k.

#ifndef DPRS_MODEL_H_
#define DPRS_MODEL_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dprs {

using Vector = std::vector<double>;

// Dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix FromRows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<double> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }

  // Appends a row of length cols(). On an empty 0x0 matrix, fixes cols.
  void AppendRow(std::span<const double> values);

  Vector Multiply(std::span<const double> x) const;
  std::vector<Vector> ToRows() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Row bookkeeping written by the generator. Optional in files.
struct RowLayout {
  std::size_t capacity_rows = 0;
  std::size_t nonnegativity_rows = 0;
  std::size_t demand_rows = 0;
  friend bool operator==(const RowLayout&, const RowLayout&) = default;
};

struct PartyData {
  Matrix usage;        // A_k, m x n_k
  Matrix constraints;  // B_k, m_k x n_k
  Vector rhs;          // b_k
  Vector utility;      // u_k
  Vector claim_bound;  // s_bar_k, length m
  std::optional<RowLayout> layout;

  std::size_t num_vars() const { return utility.size(); }
  std::size_t num_private() const { return rhs.size(); }

  friend bool operator==(const PartyData&, const PartyData&) = default;
};

struct Instance {
  Vector capacity;  // c, length m
  std::vector<PartyData> parties;

  std::size_t num_resources() const { return capacity.size(); }
  std::size_t num_parties() const { return parties.size(); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Per-party allotments s_k and, optionally, decisions x_k.
struct AllotmentBundle {
  std::vector<Vector> allotments;
  std::optional<std::vector<Vector>> decisions;
};

struct Violation {
  std::string code;
  std::string message;
  std::optional<std::size_t> party;
  std::optional<std::size_t> index;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool Has(std::string_view code) const;
  std::string Summary() const;
};

// Violation codes reported by ValidateInstance.
inline constexpr char kNoParties[] = "no-parties";
inline constexpr char kNegativeCapacity[] = "c-negative";
inline constexpr char kDimensionMismatch[] = "dimension-mismatch";
inline constexpr char kBoundNegative[] = "s-bar-negative";
inline constexpr char kBoundExceedsCapacity[] = "s-bar-exceeds-c";
inline constexpr char kNonFinite[] = "non-finite";

ValidationReport ValidateInstance(const Instance& inst);

// Fills an unset (empty) claim bound with c.
void DefaultClaimBounds(Instance& inst);

// Delta_k = ||s_bar_k||_inf.
double Sensitivity(const PartyData& party);

// sum_k u_k' x_k. Throws InvalidInputError on dimension mismatch.
double TotalUtility(const Instance& inst, std::span<const Vector> decisions);

// 0 <= s_k (<= s_bar_k when check_upper) within tol for every party.
ValidationReport CheckAllotments(const Instance& inst,
                                 const AllotmentBundle& bundle,
                                 bool check_upper, double tol = 1e-9);

double NormInf(std::span<const double> v);
double Norm1(std::span<const double> v);
double Norm2(std::span<const double> v);
double Dot(std::span<const double> a, std::span<const double> b);

}  // namespace dprs

#endif  // DPRS_MODEL_H_
