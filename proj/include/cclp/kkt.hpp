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

#ifndef CCLP_KKT_HPP_
#define CCLP_KKT_HPP_

#include <cstdint>
#include <string>

#include "cclp/lp.hpp"

namespace cclp {

// Primal/dual/reduced-cost snapshot. Dimensions must match the owning LP.
struct Iterate {
  Vector x;  // primal, length ncols
  Vector y;  // dual, length nrows
  Vector z;  // reduced costs, length ncols
  std::int64_t k = 0;
};

struct Tolerances {
  Scalar eps_rel = 1e-6;    // relative PDHG termination
  Scalar eps_abs = 1e-6;    // absolute crossover/simplex verification
  Scalar eps_cross = 1e-2;  // first crossover launch threshold
  Scalar decrement = 0.1;   // reduction between successive launches

  // Throws std::invalid_argument unless 0 < decrement < 1 and
  // 0 < eps_rel <= eps_cross and eps_abs > 0.
  void validate() const;
};

struct ResidualReport {
  Scalar rp_norm2 = 0;  // 2-norm of row violations
  Scalar rd_norm2 = 0;  // 2-norm of A'y + z - c
  Scalar rp_inf = 0;    // max of row and column-bound violations
  Scalar rd_inf = 0;
  Scalar primal_objective = 0;  // c'x (no offset)
  Scalar dual_objective = 0;    // b'y plus finite-bound reduced-cost terms
  Scalar gap_abs = 0;           // |primal_objective - dual_objective|
  Scalar rel_primal = 0;        // rp_norm2 / (1 + ||b||)
  Scalar rel_dual = 0;          // rd_norm2 / (1 + ||c||)
  Scalar rel_gap = 0;           // gap_abs / (1 + |pobj| + |dobj|)
  Scalar maxresid_rel = 0;      // max of the three relative ratios
  Scalar complementarity = 0;   // max_j min(x_j-l_j, u_j-x_j) * |z_j|

  std::string to_json() const;
};

// Signed b - Ax on equality rows; positive distance outside the activity
// range on ranged/inequality rows (0 when inside).
Vector primal_residual(const LinearProgram& lp, const Iterate& it);

// Per-column distance outside [l, u], always >= 0.
Vector bound_violations(const LinearProgram& lp, const Iterate& it);

// A'y + z - c.
Vector dual_residual(const LinearProgram& lp, const Iterate& it);

// (c'x, dual objective). The dual objective generalizes b'y with the
// finite-bound terms sum_j [ l_j max(z_j,0) + u_j min(z_j,0) ]; for the
// nonnegative-orthant form (l = 0, u = +inf) it reduces to b'y exactly.
std::pair<Scalar, Scalar> objective_gap(const LinearProgram& lp,
                                        const Iterate& it);

ResidualReport relative_report(const LinearProgram& lp, const Iterate& it);

inline bool converged_relative(const ResidualReport& report, Scalar eps_rel) {
  return report.maxresid_rel <= eps_rel;
}

// Worst absolute violation across: row infeasibility, bound violations,
// dual residual, complementarity (all infinity norms).
Scalar absolute_violation(const LinearProgram& lp, const Iterate& it);

}  // namespace cclp

#endif  // CCLP_KKT_HPP_
