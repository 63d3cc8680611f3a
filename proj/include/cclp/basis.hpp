// Copyright 2026 The cclp Authors
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

#ifndef CCLP_BASIS_HPP_
#define CCLP_BASIS_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "cclp/lp.hpp"

namespace cclp {

// Simplex view of an equality-form LP. The column universe is the LP's own
// columns (structural + slacks) followed by one logical column e_i per row,
// fixed at zero. The logicals guarantee that an identity start basis and
// slack-fill basis repair always exist, equality rows included; at any
// feasible point they all sit at 0.
class EngineModel {
 public:
  explicit EngineModel(const LinearProgram& std_lp);

  Index num_rows() const { return m_; }
  Index num_structural() const { return n_; }
  Index num_cols() const { return n_ + m_; }
  bool is_logical(Index j) const { return j >= n_; }

  Scalar cost(Index j) const { return j < n_ ? lp_->c[j] : 0.0; }
  Scalar lower(Index j) const { return j < n_ ? lp_->col_lower[j] : 0.0; }
  Scalar upper(Index j) const { return j < n_ ? lp_->col_upper[j] : 0.0; }
  const Vector& rhs() const { return lp_->row_lower; }

  Scalar column_dot(Index j, const Vector& v) const;
  void add_column(Index j, Scalar mult, Vector& out) const;
  Scalar column_norm(Index j) const;
  SparseMat basis_matrix(const std::vector<Index>& basic) const;

  std::string column_label(Index j) const;
  // -1 if no column carries that label
  Index column_by_label(const std::string& label) const;

  const LinearProgram& lp() const { return *lp_; }

 private:
  const LinearProgram* lp_;
  Index m_, n_;
};

enum class ColStatus : char {
  kBasic = 'B',
  kAtLower = 'L',
  kAtUpper = 'U',
  kFixed = 'X',
  kFreeAtZero = 'Z',
};

// Column partition: exactly nrows basic columns plus a nonbasic status for
// everything else. Nonbasic-at-upper requires a finite upper bound,
// at-lower a finite lower bound.
struct Basis {
  std::vector<Index> basic;       // engine column indices, length nrows
  std::vector<ColStatus> status;  // length EngineModel::num_cols()

  // Structural checks only (sizes, duplicates, status consistency); throws
  // std::invalid_argument.
  void validate(const EngineModel& model) const;

  Scalar nonbasic_value(const EngineModel& model, Index j) const;
};

// All-logical identity basis; structural columns at their default status.
Basis slack_basis(const EngineModel& model);

// Default nonbasic status from the bounds: fixed when l == u, at-lower when
// l is finite, at-upper when only u is, free-at-zero otherwise.
ColStatus default_status(const EngineModel& model, Index j);

// Text serialization: one line per basic column ("B C name" / "B R name")
// plus one per nonbasic-at-upper column ("U C name"). Reading restores a
// full basis against the same model; unknown labels throw.
void write_basis(const EngineModel& model, const Basis& basis,
                 std::ostream& out);
Basis read_basis(const EngineModel& model, std::istream& in);

}  // namespace cclp

#endif  // CCLP_BASIS_HPP_
