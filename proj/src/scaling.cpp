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

#include "cclp/scaling.hpp"

#include <cmath>

namespace cclp {

namespace {

// Nearest power of two to sqrt(v), as an exact double.
Scalar pow2_sqrt(Scalar v) {
  return std::exp2(std::round(0.5 * std::log2(v)));
}

}  // namespace

LinearProgram apply_scaling(const LinearProgram& lp, const ScalingInfo& info) {
  LinearProgram out = lp;
  const Vector& r = info.row_scale;
  const Vector& s = info.col_scale;
  for (Index j = 0; j < lp.num_cols(); ++j) {
    for (SparseMat::InnerIterator it(out.A, j); it; ++it) {
      it.valueRef() *= r[it.row()] * s[j];
    }
  }
  out.c = lp.c.cwiseProduct(s);
  out.col_lower = lp.col_lower.cwiseQuotient(s);
  out.col_upper = lp.col_upper.cwiseQuotient(s);
  out.row_lower = lp.row_lower.cwiseProduct(r);
  out.row_upper = lp.row_upper.cwiseProduct(r);
  return out;
}

std::pair<LinearProgram, ScalingInfo> ruiz_scale(const LinearProgram& lp,
                                                 int iterations) {
  const Index m = lp.num_rows();
  const Index n = lp.num_cols();
  ScalingInfo info;
  info.row_scale = Vector::Ones(m);
  info.col_scale = Vector::Ones(n);

  Vector row_max(m), col_max(n);
  for (int t = 0; t < iterations; ++t) {
    row_max.setZero();
    col_max.setZero();
    for (Index j = 0; j < n; ++j) {
      for (SparseMat::InnerIterator it(lp.A, j); it; ++it) {
        const Scalar v = std::abs(it.value()) * info.row_scale[it.row()] *
                         info.col_scale[j];
        if (v > row_max[it.row()]) row_max[it.row()] = v;
        if (v > col_max[j]) col_max[j] = v;
      }
    }
    bool done = true;
    for (Index i = 0; i < m; ++i) {
      if (row_max[i] > 0.0 && (row_max[i] < 0.5 || row_max[i] >= 2.0)) {
        done = false;
        break;
      }
    }
    if (done) {
      for (Index j = 0; j < n; ++j) {
        if (col_max[j] > 0.0 && (col_max[j] < 0.5 || col_max[j] >= 2.0)) {
          done = false;
          break;
        }
      }
    }
    if (done) break;
    for (Index i = 0; i < m; ++i) {
      if (row_max[i] > 0.0) info.row_scale[i] /= pow2_sqrt(row_max[i]);
    }
    for (Index j = 0; j < n; ++j) {
      if (col_max[j] > 0.0) info.col_scale[j] /= pow2_sqrt(col_max[j]);
    }
  }
  return {apply_scaling(lp, info), info};
}

}  // namespace cclp
