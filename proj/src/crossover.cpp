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

#include "cclp/crossover.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "json.hpp"

namespace cclp {

const char* to_string(CrossoverStatus status) {
  switch (status) {
    case CrossoverStatus::kSuccess:
      return "success";
    case CrossoverStatus::kCancelled:
      return "cancelled";
    case CrossoverStatus::kIterationLimit:
      return "iteration-limit";
    case CrossoverStatus::kTimeLimit:
      return "time-limit";
    case CrossoverStatus::kInfeasible:
      return "infeasible";
    case CrossoverStatus::kUnbounded:
      return "unbounded";
    case CrossoverStatus::kNumericalError:
      return "numerical-error";
    case CrossoverStatus::kVerifyFailed:
      return "verify-failed";
  }
  return "unknown";
}

Partition guess_partition(const LinearProgram& std_lp, const Iterate& snapshot,
                          Scalar eps) {
  EngineModel model(std_lp);
  const Index n = model.num_structural();
  Partition part;
  part.label.assign(model.num_cols(), PartitionLabel::kAtLower);

  struct Scored {
    Index j;
    Scalar score;
    Scalar zabs;
  };
  std::vector<Scored> scored;
  for (Index j = 0; j < model.num_cols(); ++j) {
    const Scalar x = j < n ? snapshot.x[j] : 0.0;
    const Scalar z = j < n ? snapshot.z[j] : 0.0;
    const Scalar l = model.lower(j);
    const Scalar u = model.upper(j);
    const bool lo = is_finite(l);
    const bool up = is_finite(u);
    if (!lo && !up) {
      // free column: nothing to snap to, always a candidate
      part.label[j] = PartitionLabel::kCandidateBasic;
      scored.push_back({j, kInf, std::abs(z)});
      continue;
    }
    const Scalar dl = lo ? x - l : kInf;
    const Scalar du = up ? u - x : kInf;
    const bool nearest_upper = du < dl;
    const Scalar dist = std::min(dl, du);
    const Scalar norm = std::max(model.column_norm(j), 1e-12);
    const Scalar snap_slop = 1e-6 * eps * (1.0 + std::abs(x));
    if (dist <= snap_slop || std::abs(z) > dist * norm) {
      part.label[j] =
          nearest_upper ? PartitionLabel::kAtUpper : PartitionLabel::kAtLower;
      continue;
    }
    part.label[j] = PartitionLabel::kCandidateBasic;
    scored.push_back({j, dist * norm, std::abs(z)});
  }
  std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.zabs != b.zabs) return a.zabs < b.zabs;
    return a.j < b.j;
  });
  part.candidates.reserve(scored.size());
  for (const Scored& s : scored) part.candidates.push_back(s.j);
  return part;
}

Basis build_basis(const LinearProgram& std_lp, const Partition& partition) {
  EngineModel model(std_lp);
  const Index m = model.num_rows();
  Basis basis = slack_basis(model);
  // statuses for snapped columns; unchosen candidates fall back to their
  // default status at the end
  for (Index j = 0; j < model.num_cols(); ++j) {
    if (basis.status[j] == ColStatus::kBasic) continue;
    switch (partition.label[j]) {
      case PartitionLabel::kAtLower:
        basis.status[j] = model.lower(j) == model.upper(j)
                              ? ColStatus::kFixed
                              : (is_finite(model.lower(j))
                                     ? ColStatus::kAtLower
                                     : default_status(model, j));
        break;
      case PartitionLabel::kAtUpper:
        basis.status[j] = is_finite(model.upper(j))
                              ? ColStatus::kAtUpper
                              : default_status(model, j);
        break;
      case PartitionLabel::kCandidateBasic:
        basis.status[j] = default_status(model, j);
        break;
    }
  }
  if (m == 0) return basis;

  FactorizedBasis factor(model, basis.basic);  // identity
  std::vector<bool> replaceable(m, true);
  Index remaining = m;
  for (Index j : partition.candidates) {
    if (remaining == 0) break;
    Vector a = Vector::Zero(m);
    model.add_column(j, 1.0, a);
    Vector w = factor.ftran(a);
    Index best = -1;
    Scalar best_abs = 0.0;
    Scalar wmax = 0.0;
    for (Index p = 0; p < m; ++p) {
      const Scalar mag = std::abs(w[p]);
      wmax = std::max(wmax, mag);
      if (replaceable[p] && mag > best_abs) {
        best_abs = mag;
        best = p;
      }
    }
    // dependent on the accepted set (or numerically too risky): skip
    if (best < 0 || best_abs < 1e-7 * std::max(1.0, wmax)) continue;
    const Index out = basis.basic[best];
    basis.status[out] = default_status(model, out);
    basis.basic[best] = j;
    basis.status[j] = ColStatus::kBasic;
    factor.update(best, w);
    replaceable[best] = false;
    --remaining;
  }
  basis.validate(model);
  return basis;
}

VerifyOutcome verify_basic_optimal(const LinearProgram& std_lp,
                                   const Basis& basis, Scalar eps_abs) {
  VerifyOutcome out;
  EngineModel model(std_lp);
  try {
    basis.validate(model);
  } catch (const std::exception& e) {
    out.diagnostic = e.what();
    return out;
  }
  const Index m = model.num_rows();
  const Index n = model.num_structural();
  try {
    FactorizedBasis factor(model, basis.basic);
    Vector x = Vector::Zero(model.num_cols());
    Vector r = model.rhs();
    for (Index j = 0; j < model.num_cols(); ++j) {
      if (basis.status[j] == ColStatus::kBasic) continue;
      x[j] = basis.nonbasic_value(model, j);
      if (x[j] != 0.0) model.add_column(j, -x[j], r);
    }
    Vector xb = factor.ftran(r);
    for (Index k = 0; k < m; ++k) x[basis.basic[k]] = xb[k];

    Vector cb(m);
    for (Index k = 0; k < m; ++k) cb[k] = model.cost(basis.basic[k]);
    Vector y = factor.btran(cb);

    Scalar worst = 0.0;
    // bound feasibility of the basics
    for (Index k = 0; k < m; ++k) {
      const Index j = basis.basic[k];
      worst = std::max({worst, model.lower(j) - x[j], x[j] - model.upper(j)});
    }
    // row residuals (catches inaccurate factors)
    Vector act = Vector::Zero(m);
    for (Index j = 0; j < model.num_cols(); ++j) {
      if (x[j] != 0.0) model.add_column(j, x[j], act);
    }
    worst = std::max(worst,
                     (model.rhs() - act).lpNorm<Eigen::Infinity>());
    // reduced-cost sign feasibility on nonbasic columns
    for (Index j = 0; j < model.num_cols(); ++j) {
      const ColStatus st = basis.status[j];
      if (st == ColStatus::kBasic || st == ColStatus::kFixed) continue;
      const Scalar d = model.cost(j) - model.column_dot(j, y);
      if (st == ColStatus::kAtLower) {
        worst = std::max(worst, -d);
      } else if (st == ColStatus::kAtUpper) {
        worst = std::max(worst, d);
      } else {  // free at zero
        worst = std::max(worst, std::abs(d));
      }
    }
    out.violation = std::max(worst, 0.0);
    out.ok = out.violation <= eps_abs;
    if (!out.ok) out.diagnostic = "violation above tolerance";
    out.iterate.x = x.head(n);
    out.iterate.y = y;
    out.iterate.z = std_lp.c - Vector(std_lp.A.transpose() * y);
  } catch (const SingularBasisError& e) {
    out.diagnostic = e.what();
  }
  return out;
}

namespace {

CrossoverStatus from_simplex(SimplexStatus status) {
  switch (status) {
    case SimplexStatus::kOptimal:
      return CrossoverStatus::kSuccess;
    case SimplexStatus::kIterationLimit:
      return CrossoverStatus::kIterationLimit;
    case SimplexStatus::kCancelled:
      return CrossoverStatus::kCancelled;
    case SimplexStatus::kTimeLimit:
      return CrossoverStatus::kTimeLimit;
    case SimplexStatus::kInfeasible:
      return CrossoverStatus::kInfeasible;
    case SimplexStatus::kUnbounded:
      return CrossoverStatus::kUnbounded;
    case SimplexStatus::kNumericalError:
      return CrossoverStatus::kNumericalError;
  }
  return CrossoverStatus::kNumericalError;
}

}  // namespace

CrossoverResult run_crossover(const CrossoverTask& task) {
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&]() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t0)
        .count();
  };
  CrossoverResult res;
  res.launch_threshold = task.launch_threshold;
  const LinearProgram& lp = *task.std_lp;

  Partition part = guess_partition(lp, task.snapshot, task.launch_threshold);
  Basis start = build_basis(lp, part);

  SimplexOptions opts = task.simplex;
  opts.eps_abs = task.tol.eps_abs;
  SimplexResult cleaned = primal_simplex(lp, start, opts);
  res.cleanup_pivots = cleaned.pivots;
  res.basis = cleaned.basis;
  res.status = from_simplex(cleaned.status);
  if (res.status != CrossoverStatus::kSuccess) {
    res.iterate = cleaned.iterate;
    res.seconds = elapsed();
    return res;
  }
  VerifyOutcome verdict = verify_basic_optimal(lp, cleaned.basis,
                                               task.tol.eps_abs);
  if (!verdict.ok) {
    res.status = CrossoverStatus::kVerifyFailed;
    res.iterate = cleaned.iterate;
    res.abs_violation = verdict.violation;
    res.seconds = elapsed();
    return res;
  }
  res.iterate = verdict.iterate;
  res.abs_violation = absolute_violation(lp, res.iterate);
  res.seconds = elapsed();
  return res;
}

std::string CrossoverResult::to_json() const {
  nlohmann::json j{{"status", to_string(status)},
                   {"threshold", launch_threshold},
                   {"pivots", cleanup_pivots},
                   {"wall_s", seconds},
                   {"violation", abs_violation}};
  return j.dump();
}

}  // namespace cclp
