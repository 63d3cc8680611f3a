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

#include "cclp/lp.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cclp {

bool LinearProgram::all_rows_equality() const {
  for (Index i = 0; i < num_rows(); ++i) {
    if (!row_is_equality(*this, i)) return false;
  }
  return true;
}

Vector LinearProgram::representative_rhs() const {
  Vector b = Vector::Zero(num_rows());
  for (Index i = 0; i < num_rows(); ++i) {
    if (is_finite(row_upper[i])) {
      b[i] = row_upper[i];
    } else if (is_finite(row_lower[i])) {
      b[i] = row_lower[i];
    }
  }
  return b;
}

namespace {

void check(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("invalid LP: " + what);
}

}  // namespace

void LinearProgram::validate() const {
  const Index m = num_rows();
  const Index n = num_cols();
  check(c.size() == n, "objective length != ncols");
  check(row_lower.size() == m && row_upper.size() == m,
        "row bound length != nrows");
  check(col_lower.size() == n && col_upper.size() == n,
        "column bound length != ncols");
  check(static_cast<Index>(sense.size()) == m, "sense length != nrows");
  check(row_names.empty() || static_cast<Index>(row_names.size()) == m,
        "row name count != nrows");
  check(col_names.empty() || static_cast<Index>(col_names.size()) == n,
        "column name count != ncols");
  for (Index j = 0; j < n; ++j) {
    check(col_lower[j] <= col_upper[j],
          "crossed bounds on column " + std::to_string(j));
    check(!std::isnan(c[j]), "NaN objective coefficient");
  }
  for (Index i = 0; i < m; ++i) {
    check(row_lower[i] <= row_upper[i],
          "crossed activity bounds on row " + std::to_string(i));
  }
  check(A.isCompressed(), "matrix not in compressed form");
  const Index* offsets = A.outerIndexPtr();
  const Index* rows = A.innerIndexPtr();
  const Scalar* vals = A.valuePtr();
  for (Index j = 0; j < n; ++j) {
    check(offsets[j] <= offsets[j + 1], "decreasing column offsets");
    for (Index p = offsets[j]; p < offsets[j + 1]; ++p) {
      check(rows[p] >= 0 && rows[p] < m, "row index out of range");
      if (p > offsets[j]) {
        check(rows[p] > rows[p - 1], "unsorted or duplicate row indices");
      }
      check(vals[p] != 0.0, "explicit zero stored");
      check(!std::isnan(vals[p]), "NaN matrix entry");
    }
  }
}

}  // namespace cclp
