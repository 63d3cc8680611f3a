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

#include "cclp/simplex.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <set>

namespace cclp {

const char* to_string(SimplexStatus status) {
  switch (status) {
    case SimplexStatus::kOptimal:
      return "optimal";
    case SimplexStatus::kIterationLimit:
      return "iteration-limit";
    case SimplexStatus::kCancelled:
      return "cancelled";
    case SimplexStatus::kTimeLimit:
      return "time-limit";
    case SimplexStatus::kInfeasible:
      return "infeasible";
    case SimplexStatus::kUnbounded:
      return "unbounded";
    case SimplexStatus::kNumericalError:
      return "numerical-error";
  }
  return "unknown";
}

RatioOutcome ratio_test(const EngineModel& model, const Basis& basis,
                        const Vector& x, Index entering, int direction,
                        const Vector& w, Scalar feas_tol, bool bland) {
  constexpr Scalar kZeroRate = 1e-11;
  const Index m = model.num_rows();
  RatioOutcome out;
  Scalar best_t = kInf;
  Index best_pos = -1;
  Scalar best_w = 0.0;
  ColStatus best_to = ColStatus::kAtLower;

  for (Index k = 0; k < m; ++k) {
    const Scalar rate = -direction * w[k];  // d x_B[k] / dt
    if (std::abs(rate) <= kZeroRate) continue;
    const Index j = basis.basic[k];
    const Scalar l = model.lower(j);
    const Scalar u = model.upper(j);
    Scalar target;
    ColStatus to;
    if (rate > 0.0) {
      // moving up: an infeasible-below basic blocks when it regains its
      // lower bound, a feasible one at its upper bound; a basic already
      // above its upper bound has no bound ahead and never blocks
      if (x[j] < l - feas_tol) {
        target = l;
        to = ColStatus::kAtLower;
      } else if (x[j] > u + feas_tol) {
        continue;
      } else if (is_finite(u)) {
        target = u;
        to = ColStatus::kAtUpper;
      } else {
        continue;
      }
    } else {
      if (x[j] > u + feas_tol) {
        target = u;
        to = ColStatus::kAtUpper;
      } else if (x[j] < l - feas_tol) {
        continue;
      } else if (is_finite(l)) {
        target = l;
        to = ColStatus::kAtLower;
      } else {
        continue;
      }
    }
    const Scalar t = std::max((target - x[j]) / rate, 0.0);
    const bool wins =
        t < best_t - 1e-12 ||
        (t <= best_t + 1e-12 && best_pos >= 0 &&
         (bland ? j < basis.basic[best_pos]
                : std::abs(w[k]) > std::abs(best_w)));
    if (best_pos < 0 ? t < best_t : wins) {
      best_t = t;
      best_pos = k;
      best_w = w[k];
      if (l == u) to = ColStatus::kFixed;
      best_to = to;
    }
  }

  // The entering column's own opposite bound competes as a bound flip.
  Scalar own = kInf;
  const Scalar el = model.lower(entering);
  const Scalar eu = model.upper(entering);
  if (is_finite(el) && is_finite(eu)) own = eu - el;

  if (is_finite(own) && own <= best_t) {
    out.kind = RatioOutcome::kBoundFlip;
    out.step = own;
    return out;
  }
  if (best_pos < 0) {
    out.kind = RatioOutcome::kUnbounded;
    return out;
  }
  out.kind = RatioOutcome::kLeaves;
  out.leaving_pos = best_pos;
  out.step = best_t;
  out.leaving_to = best_to;
  return out;
}

namespace {

constexpr Scalar kPivotTol = 1e-7;
constexpr Scalar kDegenerateStep = 1e-11;

class Engine {
 public:
  Engine(const LinearProgram& std_lp, const Basis& start,
         const SimplexOptions& opt)
      : model_(std_lp),
        opt_(opt),
        basis_(start),
        start_time_(std::chrono::steady_clock::now()) {
    basis_.validate(model_);
    ftol_ = std::min(opt_.eps_abs, 1e-9);
    dtol_ = std::min(opt_.eps_abs, 1e-9);
    x_ = Vector::Zero(model_.num_cols());
    for (Index j = 0; j < model_.num_cols(); ++j) {
      if (basis_.status[j] != ColStatus::kBasic) {
        x_[j] = basis_.nonbasic_value(model_, j);
      }
    }
  }

  SimplexResult run() {
    SimplexResult res;
    try {
      res.status = iterate();
    } catch (const SingularBasisError&) {
      res.status = SimplexStatus::kNumericalError;
    }
    res.basis = basis_;
    res.pivots = pivots_;
    res.phase1_pivots = phase1_pivots_;
    res.bound_flips = flips_;
    res.refactorizations = refactor_count_;
    res.max_basic_drift = max_drift_;
    res.seconds = elapsed();
    res.iterate = final_iterate();
    return res;
  }

 private:
  Scalar elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_time_)
        .count();
  }

  void refactorize() {
    // Rebuild factors; on a singular basis swap the dependent columns for
    // the logicals of unpivoted rows and retry once.
    try {
      factor_.emplace(model_, basis_.basic);
    } catch (const SingularBasisError&) {
      repair_basis();
      factor_.emplace(model_, basis_.basic);
    }
    factor_->set_refactorizations(++refactor_count_);
    since_refactor_ = 0;
    recompute_basics();
  }

  void repair_basis() {
    std::vector<Index> bad = dependent_positions(model_, basis_.basic);
    if (bad.empty()) throw SingularBasisError("unrepairable basis", {});
    std::set<Index> basic_set(basis_.basic.begin(), basis_.basic.end());
    std::set<Index> free_rows;
    for (Index i = 0; i < model_.num_rows(); ++i) {
      if (!basic_set.count(model_.num_structural() + i)) free_rows.insert(i);
    }
    for (Index pos : bad) {
      // pick the free logical whose row is "least covered" -- any works
      // structurally because the kept columns are independent
      if (free_rows.empty()) {
        throw SingularBasisError("basis repair ran out of logicals", {});
      }
      const Index row = *free_rows.begin();
      free_rows.erase(free_rows.begin());
      const Index out = basis_.basic[pos];
      const Index in = model_.num_structural() + row;
      basis_.basic[pos] = in;
      basis_.status[out] = default_status(model_, out);
      basis_.status[in] = ColStatus::kBasic;
      x_[out] = basis_.nonbasic_value(model_, out);
    }
  }

  void recompute_basics() {
    Vector r = model_.rhs();
    for (Index j = 0; j < model_.num_cols(); ++j) {
      if (basis_.status[j] != ColStatus::kBasic && x_[j] != 0.0) {
        model_.add_column(j, -x_[j], r);
      }
    }
    Vector xb = factor_->ftran(r);
    if (basics_valid_) {
      Scalar drift = 0.0;
      for (Index k = 0; k < model_.num_rows(); ++k) {
        drift = std::max(drift, std::abs(xb[k] - x_[basis_.basic[k]]));
      }
      max_drift_ = std::max(max_drift_, drift);
    }
    for (Index k = 0; k < model_.num_rows(); ++k) {
      x_[basis_.basic[k]] = xb[k];
    }
    basics_valid_ = true;
  }

  // Infeasibility gradient over basic positions; empty result means primal
  // feasible at ftol.
  bool infeasibility_gradient(Vector& g, Scalar& worst) const {
    g.setZero(model_.num_rows());
    worst = 0.0;
    bool any = false;
    for (Index k = 0; k < model_.num_rows(); ++k) {
      const Index j = basis_.basic[k];
      const Scalar below = model_.lower(j) - x_[j];
      const Scalar above = x_[j] - model_.upper(j);
      if (below > ftol_) {
        g[k] = -1.0;
        any = true;
        worst = std::max(worst, below);
      } else if (above > ftol_) {
        g[k] = 1.0;
        any = true;
        worst = std::max(worst, above);
      }
    }
    return any;
  }

  struct Pricing {
    Index entering = -1;
    int direction = 0;
    Scalar violation = 0.0;
  };

  Pricing price(bool phase1, const Vector& y,
                const std::set<Index>& skip) const {
    Pricing pick;
    for (Index j = 0; j < model_.num_cols(); ++j) {
      const ColStatus st = basis_.status[j];
      if (st == ColStatus::kBasic || st == ColStatus::kFixed) continue;
      if (skip.count(j)) continue;
      const Scalar cost = phase1 ? 0.0 : model_.cost(j);
      const Scalar d = cost - model_.column_dot(j, y);
      Scalar viol = 0.0;
      int dir = 0;
      if (st == ColStatus::kAtLower && d < -dtol_) {
        viol = -d;
        dir = 1;
      } else if (st == ColStatus::kAtUpper && d > dtol_) {
        viol = d;
        dir = -1;
      } else if (st == ColStatus::kFreeAtZero && std::abs(d) > dtol_) {
        viol = std::abs(d);
        dir = d < 0.0 ? 1 : -1;
      } else {
        continue;
      }
      if (bland_) {
        if (pick.entering < 0) pick = {j, dir, viol};
      } else if (viol > pick.violation) {
        pick = {j, dir, viol};
      }
    }
    return pick;
  }

  SimplexStatus iterate() {
    refactorize();
    std::set<Index> skip;
    Vector g;
    while (true) {
      if (opt_.cancel != nullptr &&
          opt_.cancel->load(std::memory_order_relaxed)) {
        return SimplexStatus::kCancelled;
      }
      if (elapsed() > opt_.time_limit) return SimplexStatus::kTimeLimit;
      if (since_refactor_ >= opt_.refactor_interval) refactorize();

      Scalar worst_infeas = 0.0;
      const bool phase1 = infeasibility_gradient(g, worst_infeas);
      Vector y =
          phase1 ? factor_->btran(g) : factor_->btran(basic_costs());
      Pricing pick = price(phase1, y, skip);
      if (pick.entering < 0) {
        if (phase1) return SimplexStatus::kInfeasible;
        return SimplexStatus::kOptimal;
      }

      Vector a_col = Vector::Zero(model_.num_rows());
      model_.add_column(pick.entering, 1.0, a_col);
      Vector w = factor_->ftran(a_col);
      RatioOutcome ratio = ratio_test(model_, basis_, x_, pick.entering,
                                      pick.direction, w, ftol_, bland_);
      if (ratio.kind == RatioOutcome::kUnbounded) {
        // A bounded-below phase-1 objective cannot ride an unbounded ray.
        return phase1 ? SimplexStatus::kNumericalError
                      : SimplexStatus::kUnbounded;
      }
      if (pivots_ >= opt_.max_pivots) return SimplexStatus::kIterationLimit;

      if (ratio.kind == RatioOutcome::kLeaves &&
          std::abs(w[ratio.leaving_pos]) < kPivotTol) {
        // Tiny pivot element: refresh the factors once, then shelve the
        // column for this pricing round.
        if (factor_->updates() > 0) {
          refactorize();
        } else {
          skip.insert(pick.entering);
        }
        continue;
      }
      skip.clear();

      apply(pick, w, ratio, phase1);
      if (!phase1 && opt_.objective_trace != nullptr) {
        opt_.objective_trace->push_back(objective());
      }
    }
  }

  Vector basic_costs() const {
    Vector cb(model_.num_rows());
    for (Index k = 0; k < model_.num_rows(); ++k) {
      cb[k] = model_.cost(basis_.basic[k]);
    }
    return cb;
  }

  Scalar objective() const {
    Scalar v = 0.0;
    for (Index j = 0; j < model_.num_structural(); ++j) {
      v += model_.cost(j) * x_[j];
    }
    return v;
  }

  void apply(const Pricing& pick, const Vector& w, const RatioOutcome& ratio,
             bool phase1) {
    const Scalar t = ratio.step;
    ++pivots_;
    if (phase1) ++phase1_pivots_;
    if (t <= kDegenerateStep) {
      if (++consecutive_degenerate_ > opt_.degenerate_switch) bland_ = true;
    } else {
      consecutive_degenerate_ = 0;
      bland_ = false;
    }
    // basics move as x_B - t * dir * w
    if (t != 0.0) {
      for (Index k = 0; k < model_.num_rows(); ++k) {
        x_[basis_.basic[k]] -= pick.direction * t * w[k];
      }
      x_[pick.entering] += pick.direction * t;
    }
    if (ratio.kind == RatioOutcome::kBoundFlip) {
      ++flips_;
      basis_.status[pick.entering] =
          basis_.status[pick.entering] == ColStatus::kAtUpper
              ? ColStatus::kAtLower
              : ColStatus::kAtUpper;
      // land exactly on the bound
      x_[pick.entering] = basis_.nonbasic_value(model_, pick.entering);
      return;
    }
    const Index p = ratio.leaving_pos;
    const Index leaving = basis_.basic[p];
    basis_.status[leaving] = ratio.leaving_to;
    x_[leaving] = basis_.nonbasic_value(model_, leaving);
    basis_.basic[p] = pick.entering;
    basis_.status[pick.entering] = ColStatus::kBasic;
    factor_->update(p, w);
    ++since_refactor_;
  }

  Iterate final_iterate() {
    Iterate it;
    const Index n = model_.num_structural();
    it.x = x_.head(n);
    if (factor_.has_value()) {
      it.y = factor_->btran(basic_costs());
    } else {
      it.y = Vector::Zero(model_.num_rows());
    }
    it.z = model_.lp().c - Vector(model_.lp().A.transpose() * it.y);
    it.k = pivots_;
    return it;
  }

  EngineModel model_;
  SimplexOptions opt_;
  Basis basis_;
  std::optional<FactorizedBasis> factor_;
  Vector x_;
  Scalar ftol_ = 1e-9, dtol_ = 1e-9;
  std::int64_t pivots_ = 0, phase1_pivots_ = 0, flips_ = 0;
  int since_refactor_ = 0, refactor_count_ = 0, consecutive_degenerate_ = 0;
  bool bland_ = false, basics_valid_ = false;
  Scalar max_drift_ = 0.0;
  std::chrono::steady_clock::time_point start_time_;
};

}  // namespace

SimplexResult primal_simplex(const LinearProgram& std_lp, const Basis& start,
                             const SimplexOptions& options) {
  Engine engine(std_lp, start, options);
  return engine.run();
}

}  // namespace cclp
