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

#ifndef CCLP_LP_HPP_
#define CCLP_LP_HPP_

#include <string>
#include <vector>

#include "cclp/types.hpp"

namespace cclp {

enum class RowSense : char { kLe = 'L', kEq = 'E', kGe = 'G' };
enum class ObjSense { kMin, kMax };

// A linear program over bounded variables:
//
//   min/max  c'x + obj_offset
//   s.t.     row_lower <= A x <= row_upper
//            col_lower <=   x <= col_upper
//
// Row activity bounds are the source of truth; `sense` records how each row
// was stated (needed to write RANGES back out faithfully). All instances are
// immutable by convention once built: solvers share them across threads
// without synchronization.
struct LinearProgram {
  std::string name;
  std::string objective_name;
  ObjSense obj_sense = ObjSense::kMin;
  Scalar obj_offset = 0.0;

  Vector c;
  SparseMat A;  // nrows x ncols, compressed column-major
  std::vector<RowSense> sense;
  Vector row_lower, row_upper;
  Vector col_lower, col_upper;

  std::vector<std::string> row_names;
  std::vector<std::string> col_names;

  Index num_rows() const { return static_cast<Index>(A.rows()); }
  Index num_cols() const { return static_cast<Index>(A.cols()); }

  bool all_rows_equality() const;

  // One finite value per row, preferred for right-hand-side norms: the upper
  // activity bound when finite, otherwise the lower. Zero for free rows.
  Vector representative_rhs() const;

  // Throws std::invalid_argument on inconsistent dimensions, crossed bounds,
  // or malformed sparse structure.
  void validate() const;
};

// Equality row helper: lower == upper (including both infinite is *not* an
// equality; a free row has lower=-inf, upper=+inf).
inline bool row_is_equality(const LinearProgram& lp, Index i) {
  return lp.row_lower[i] == lp.row_upper[i] && is_finite(lp.row_lower[i]);
}

}  // namespace cclp

#endif  // CCLP_LP_HPP_
