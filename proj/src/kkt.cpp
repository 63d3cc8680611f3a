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

#include "cclp/kkt.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cclp/kernels.hpp"
#include "json.hpp"

namespace cclp {

void Tolerances::validate() const {
  if (!(decrement > 0.0 && decrement < 1.0)) {
    throw std::invalid_argument("tolerances: decrement must be in (0,1)");
  }
  if (!(eps_rel > 0.0 && eps_rel <= eps_cross)) {
    throw std::invalid_argument(
        "tolerances: need 0 < eps_rel <= eps_cross");
  }
  if (!(eps_abs > 0.0)) {
    throw std::invalid_argument("tolerances: eps_abs must be positive");
  }
}

namespace {

void check_dims(const LinearProgram& lp, const Iterate& it) {
  if (it.x.size() != lp.num_cols() || it.y.size() != lp.num_rows() ||
      it.z.size() != lp.num_cols()) {
    throw std::invalid_argument("iterate dimensions do not match LP");
  }
}

}  // namespace

Vector primal_residual(const LinearProgram& lp, const Iterate& it) {
  check_dims(lp, it);
  Vector ax = matvec(lp.A, it.x);
  Vector r(lp.num_rows());
  for (Index i = 0; i < lp.num_rows(); ++i) {
    if (row_is_equality(lp, i)) {
      r[i] = lp.row_lower[i] - ax[i];
    } else if (ax[i] < lp.row_lower[i]) {
      r[i] = lp.row_lower[i] - ax[i];
    } else if (ax[i] > lp.row_upper[i]) {
      r[i] = ax[i] - lp.row_upper[i];
    } else {
      r[i] = 0.0;
    }
  }
  return r;
}

Vector bound_violations(const LinearProgram& lp, const Iterate& it) {
  check_dims(lp, it);
  Vector v(lp.num_cols());
  for (Index j = 0; j < lp.num_cols(); ++j) {
    v[j] = std::max({lp.col_lower[j] - it.x[j], it.x[j] - lp.col_upper[j],
                     0.0});
  }
  return v;
}

Vector dual_residual(const LinearProgram& lp, const Iterate& it) {
  check_dims(lp, it);
  return matvec_transpose(lp.A, it.y) + it.z - lp.c;
}

std::pair<Scalar, Scalar> objective_gap(const LinearProgram& lp,
                                        const Iterate& it) {
  check_dims(lp, it);
  const Scalar pobj = lp.c.dot(it.x);
  Scalar dobj = lp.representative_rhs().dot(it.y);
  for (Index j = 0; j < lp.num_cols(); ++j) {
    const Scalar zj = it.z[j];
    if (zj > 0.0 && is_finite(lp.col_lower[j])) {
      dobj += lp.col_lower[j] * zj;
    } else if (zj < 0.0 && is_finite(lp.col_upper[j])) {
      dobj += lp.col_upper[j] * zj;
    }
  }
  return {pobj, dobj};
}

namespace {

Scalar complementarity_inf(const LinearProgram& lp, const Iterate& it) {
  Scalar worst = 0.0;
  for (Index j = 0; j < lp.num_cols(); ++j) {
    Scalar dist = kInf;
    if (is_finite(lp.col_lower[j])) {
      dist = std::min(dist, std::abs(it.x[j] - lp.col_lower[j]));
    }
    if (is_finite(lp.col_upper[j])) {
      dist = std::min(dist, std::abs(it.x[j] - lp.col_upper[j]));
    }
    if (!is_finite(dist)) continue;  // free column: no bound to pair with
    worst = std::max(worst, dist * std::abs(it.z[j]));
  }
  return worst;
}

}  // namespace

ResidualReport relative_report(const LinearProgram& lp, const Iterate& it) {
  ResidualReport rep;
  const Vector rp = primal_residual(lp, it);
  const Vector bv = bound_violations(lp, it);
  const Vector rd = dual_residual(lp, it);
  rep.rp_norm2 = rp.norm();
  rep.rd_norm2 = rd.norm();
  rep.rp_inf = std::max(rp.lpNorm<Eigen::Infinity>(),
                        bv.size() ? bv.lpNorm<Eigen::Infinity>() : 0.0);
  rep.rd_inf = rd.size() ? rd.lpNorm<Eigen::Infinity>() : 0.0;
  const auto [pobj, dobj] = objective_gap(lp, it);
  rep.primal_objective = pobj;
  rep.dual_objective = dobj;
  rep.gap_abs = std::abs(pobj - dobj);
  rep.rel_primal = rep.rp_norm2 / (1.0 + lp.representative_rhs().norm());
  rep.rel_dual = rep.rd_norm2 / (1.0 + lp.c.norm());
  rep.rel_gap = rep.gap_abs / (1.0 + std::abs(pobj) + std::abs(dobj));
  rep.maxresid_rel = std::max({rep.rel_primal, rep.rel_dual, rep.rel_gap});
  rep.complementarity = complementarity_inf(lp, it);
  return rep;
}

Scalar absolute_violation(const LinearProgram& lp, const Iterate& it) {
  const Vector rp = primal_residual(lp, it);
  const Vector bv = bound_violations(lp, it);
  const Vector rd = dual_residual(lp, it);
  Scalar worst = rp.size() ? rp.lpNorm<Eigen::Infinity>() : 0.0;
  if (bv.size()) worst = std::max(worst, bv.lpNorm<Eigen::Infinity>());
  if (rd.size()) worst = std::max(worst, rd.lpNorm<Eigen::Infinity>());
  return std::max(worst, complementarity_inf(lp, it));
}

std::string ResidualReport::to_json() const {
  nlohmann::json j{{"rp_norm2", rp_norm2},
                   {"rd_norm2", rd_norm2},
                   {"rp_inf", rp_inf},
                   {"rd_inf", rd_inf},
                   {"primal_objective", primal_objective},
                   {"dual_objective", dual_objective},
                   {"gap_abs", gap_abs},
                   {"rel_primal", rel_primal},
                   {"rel_dual", rel_dual},
                   {"rel_gap", rel_gap},
                   {"maxresid_rel", maxresid_rel},
                   {"complementarity", complementarity}};
  return j.dump();
}

}  // namespace cclp
