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

#include "cclp/standard_form.hpp"

#include <stdexcept>
#include <vector>

#include "cclp/kernels.hpp"

namespace cclp {

StandardFormMap to_standard_form(const LinearProgram& lp) {
  lp.validate();
  const Index m = lp.num_rows();
  const Index n = lp.num_cols();

  StandardFormMap map;
  map.orig_cols = n;
  map.orig_rows = m;
  map.negated = lp.obj_sense == ObjSense::kMax;
  map.slack_col_of_row.assign(m, -1);

  Index n_std = n;
  for (Index i = 0; i < m; ++i) {
    if (!row_is_equality(lp, i)) map.slack_col_of_row[i] = n_std++;
  }

  LinearProgram& std_lp = map.std_lp;
  std_lp.name = lp.name;
  std_lp.objective_name = lp.objective_name;
  std_lp.obj_sense = ObjSense::kMin;
  std_lp.obj_offset = map.negated ? -lp.obj_offset : lp.obj_offset;
  std_lp.c = Vector::Zero(n_std);
  std_lp.c.head(n) = map.negated ? Vector(-lp.c) : lp.c;
  std_lp.col_lower = Vector::Zero(n_std);
  std_lp.col_upper = Vector::Zero(n_std);
  std_lp.col_lower.head(n) = lp.col_lower;
  std_lp.col_upper.head(n) = lp.col_upper;
  std_lp.row_lower = Vector::Zero(m);
  std_lp.row_upper = Vector::Zero(m);
  std_lp.sense.assign(m, RowSense::kEq);
  std_lp.row_names = lp.row_names;
  std_lp.col_names = lp.col_names;
  if (std_lp.col_names.empty() && n_std > n) {
    for (Index j = 0; j < n; ++j)
      std_lp.col_names.push_back("C" + std::to_string(j));
  }

  std::vector<Eigen::Triplet<Scalar>> extra;
  for (Index i = 0; i < m; ++i) {
    const Index s = map.slack_col_of_row[i];
    if (s < 0) {
      std_lp.row_lower[i] = lp.row_lower[i];
      std_lp.row_upper[i] = lp.row_upper[i];
      continue;
    }
    // Pin b to a finite side of the activity range: b = ru when finite,
    // otherwise rl. The slack s = b - a'x then ranges over [b-ru, b-rl].
    const Scalar rl = lp.row_lower[i];
    const Scalar ru = lp.row_upper[i];
    if (!is_finite(rl) && !is_finite(ru)) {
      throw std::invalid_argument("to_standard_form: free row " +
                                  std::to_string(i));
    }
    const Scalar b = is_finite(ru) ? ru : rl;
    std_lp.row_lower[i] = b;
    std_lp.row_upper[i] = b;
    extra.emplace_back(i, s, 1.0);
    std_lp.col_lower[s] = is_finite(ru) ? 0.0 : -kInf;
    std_lp.col_upper[s] = is_finite(rl) ? b - rl : kInf;
    if (!std_lp.col_names.empty()) {
      const std::string rname =
          lp.row_names.empty() ? "R" + std::to_string(i) : lp.row_names[i];
      std_lp.col_names.push_back("SLK_" + rname);
    }
  }

  if (n_std == n) {
    std_lp.A = lp.A;
  } else {
    std::vector<Eigen::Triplet<Scalar>> all;
    all.reserve(lp.A.nonZeros() + extra.size());
    for (Index j = 0; j < n; ++j) {
      for (SparseMat::InnerIterator it(lp.A, j); it; ++it) {
        all.emplace_back(static_cast<Index>(it.row()), j, it.value());
      }
    }
    all.insert(all.end(), extra.begin(), extra.end());
    std_lp.A = make_sparse(m, n_std, all);
  }
  std_lp.validate();
  return map;
}

Vector StandardFormMap::lift_x(const Eigen::Ref<const Vector>& x) const {
  if (x.size() != orig_cols) {
    throw std::invalid_argument("lift_x: wrong length");
  }
  Vector out = Vector::Zero(std_lp.num_cols());
  out.head(orig_cols) = x;
  if (std_lp.num_cols() > orig_cols) {
    // slack = b - a'x, computed on the original columns only
    Vector activity = std_lp.A.leftCols(orig_cols) * x;
    for (Index i = 0; i < orig_rows; ++i) {
      const Index s = slack_col_of_row[i];
      if (s >= 0) out[s] = std_lp.row_lower[i] - activity[i];
    }
  }
  return out;
}

Vector StandardFormMap::lift_y(const Eigen::Ref<const Vector>& y) const {
  return negated ? Vector(-y) : Vector(y);
}

Vector StandardFormMap::lift_z(const Eigen::Ref<const Vector>& z) const {
  Vector out = Vector::Zero(std_lp.num_cols());
  out.head(orig_cols) = negated ? Vector(-z) : Vector(z);
  return out;
}

Vector StandardFormMap::drop_x(const Eigen::Ref<const Vector>& x) const {
  return x.head(orig_cols);
}

Vector StandardFormMap::drop_y(const Eigen::Ref<const Vector>& y) const {
  return negated ? Vector(-y) : Vector(y);
}

Vector StandardFormMap::drop_z(const Eigen::Ref<const Vector>& z) const {
  Vector out = z.head(orig_cols);
  return negated ? Vector(-out) : out;
}

Scalar StandardFormMap::unmap_objective(Scalar std_objective) const {
  return negated ? -std_objective : std_objective;
}

}  // namespace cclp
