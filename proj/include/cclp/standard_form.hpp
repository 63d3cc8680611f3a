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

#ifndef CCLP_STANDARD_FORM_HPP_
#define CCLP_STANDARD_FORM_HPP_

#include <vector>

#include "cclp/lp.hpp"

namespace cclp {

// Equality-form view of a general LP:
//
//   min c'x   s.t.  A x = b,  l <= x <= u
//
// Every inequality row gains one slack column (coefficient +1) whose bounds
// absorb the activity range; rows that are already equalities are untouched.
// A max objective is negated. The mapping back to the original spaces is
// exact: x drops the slack tail, y and z flip sign when the objective was
// negated.
struct StandardFormMap {
  LinearProgram std_lp;
  Index orig_cols = 0;
  Index orig_rows = 0;
  bool negated = false;
  std::vector<Index> slack_col_of_row;  // -1 when the row had no slack

  // Original -> standard. Slack values are computed from row activities.
  Vector lift_x(const Eigen::Ref<const Vector>& x) const;
  Vector lift_y(const Eigen::Ref<const Vector>& y) const;
  Vector lift_z(const Eigen::Ref<const Vector>& z) const;

  // Standard -> original. Exact (drop + sign flip only).
  Vector drop_x(const Eigen::Ref<const Vector>& x) const;
  Vector drop_y(const Eigen::Ref<const Vector>& y) const;
  Vector drop_z(const Eigen::Ref<const Vector>& z) const;

  // Objective value in the original sense (offset included on both sides).
  Scalar unmap_objective(Scalar std_objective) const;
};

StandardFormMap to_standard_form(const LinearProgram& lp);

}  // namespace cclp

#endif  // CCLP_STANDARD_FORM_HPP_
