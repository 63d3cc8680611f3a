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

#ifndef CCLP_SCALING_HPP_
#define CCLP_SCALING_HPP_

#include <utility>

#include "cclp/lp.hpp"

namespace cclp {

// Diagonal equilibration factors, all positive powers of two so that
// applying and unapplying is bit-exact. Scaled data:
//   A' = R A S,  row bounds *= r,  c' = S c,  column bounds /= s
// and iterates map back as x = S x', y = R y', z = z' / s.
struct ScalingInfo {
  Vector row_scale;  // r, length nrows
  Vector col_scale;  // s, length ncols

  Vector unscale_x(const Eigen::Ref<const Vector>& x) const {
    return x.cwiseProduct(col_scale);
  }
  Vector unscale_y(const Eigen::Ref<const Vector>& y) const {
    return y.cwiseProduct(row_scale);
  }
  Vector unscale_z(const Eigen::Ref<const Vector>& z) const {
    return z.cwiseQuotient(col_scale);
  }
};

// Ruiz equilibration: repeatedly divides each row and column by the
// power-of-two rounding of the square root of its max-abs entry. After
// convergence every nonempty row and column of the scaled matrix has its
// largest magnitude in [1/2, 2). Zero rows/columns keep factor 1;
// iterations == 0 returns identity scaling.
std::pair<LinearProgram, ScalingInfo> ruiz_scale(const LinearProgram& lp,
                                                 int iterations);

// Applies existing factors (used by tests to check reversibility).
LinearProgram apply_scaling(const LinearProgram& lp, const ScalingInfo& info);

}  // namespace cclp

#endif  // CCLP_SCALING_HPP_
