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

#include "cclp/pdhg.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

#include "cclp/kernels.hpp"
#include "cclp/scaling.hpp"

namespace cclp {

const char* to_string(PdhgStopReason reason) {
  switch (reason) {
    case PdhgStopReason::kConverged:
      return "converged";
    case PdhgStopReason::kIterationLimit:
      return "iteration-limit";
    case PdhgStopReason::kTimeLimit:
      return "time-limit";
    case PdhgStopReason::kCancelled:
      return "cancelled";
    case PdhgStopReason::kWonByCrossover:
      return "won-by-crossover";
    case PdhgStopReason::kNumericalError:
      return "numerical-error";
  }
  return "unknown";
}

Scalar estimate_matrix_norm(const SparseMat& A, int iterations,
                            std::uint64_t seed) {
  if (A.rows() == 0 || A.cols() == 0 || A.nonZeros() == 0) return 0.0;
  std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull);
  std::normal_distribution<Scalar> gauss(0.0, 1.0);
  Vector v(A.cols());
  for (Index j = 0; j < A.cols(); ++j) v[j] = gauss(rng);
  if (v.norm() == 0.0) v.setOnes();
  v /= v.norm();
  Scalar lambda = 0.0;
  for (int t = 0; t < iterations; ++t) {
    Vector w = A * v;
    Vector u = A.transpose() * w;
    const Scalar norm = u.norm();
    if (norm == 0.0) return 0.0;  // v in the null space; A'A v = 0
    lambda = v.dot(u);            // Rayleigh quotient for A'A
    v = u / norm;
  }
  return std::sqrt(std::max(lambda, 0.0));
}

PdhgState make_initial_state(const LinearProgram& std_lp) {
  PdhgState s;
  const Index n = std_lp.num_cols();
  const Index m = std_lp.num_rows();
  s.current.x = Vector::Zero(n)
                    .cwiseMax(std_lp.col_lower)
                    .cwiseMin(std_lp.col_upper);
  s.current.y = Vector::Zero(m);
  s.current.z = Vector::Zero(n);
  s.x_sum = Vector::Zero(n);
  s.y_sum = Vector::Zero(m);
  s.ax_sum = Vector::Zero(m);
  s.aty_sum = Vector::Zero(n);
  refresh_products(std_lp, s);
  return s;
}

namespace {

// Reduced costs from the dual: clip c - A'y to the sign admissible at the
// bound nearest to x. Free columns take 0; the clipped-away part is exactly
// the dual infeasibility that shows up in A'y + z - c.
Vector clipped_reduced_costs(const LinearProgram& lp, const Vector& x,
                             const Vector& aty) {
  Vector z = lp.c - aty;
  for (Index j = 0; j < lp.num_cols(); ++j) {
    const bool lo = is_finite(lp.col_lower[j]);
    const bool up = is_finite(lp.col_upper[j]);
    if (!lo && !up) {
      z[j] = 0.0;
    } else if (lo && up) {
      const Scalar dl = x[j] - lp.col_lower[j];
      const Scalar du = lp.col_upper[j] - x[j];
      z[j] = dl <= du ? std::max(z[j], 0.0) : std::min(z[j], 0.0);
    } else if (lo) {
      z[j] = std::max(z[j], 0.0);
    } else {
      z[j] = std::min(z[j], 0.0);
    }
  }
  return z;
}

}  // namespace

void refresh_products(const LinearProgram& std_lp, PdhgState& state) {
  state.ax = std_lp.A * state.current.x;
  state.aty = std_lp.A.transpose() * state.current.y;
  state.current.z = clipped_reduced_costs(std_lp, state.current.x, state.aty);
}

void pdhg_step(const LinearProgram& std_lp, PdhgState& state, Scalar tau,
               Scalar sigma) {
  const Vector& b = std_lp.row_lower;  // equality form
  Vector x_next = (state.current.x - tau * (std_lp.c - state.aty))
                      .cwiseMax(std_lp.col_lower)
                      .cwiseMin(std_lp.col_upper);
  Vector ax_next = std_lp.A * x_next;
  Vector y_next =
      state.current.y + sigma * (b - (2.0 * ax_next - state.ax));
  Vector aty_next = std_lp.A.transpose() * y_next;
  if (!x_next.allFinite() || !y_next.allFinite()) {
    throw PdhgNumericalError(state.iteration);
  }
  state.current.x = std::move(x_next);
  state.current.y = std::move(y_next);
  state.ax = std::move(ax_next);
  state.aty = std::move(aty_next);
  state.current.z =
      clipped_reduced_costs(std_lp, state.current.x, state.aty);
  state.current.k = ++state.iteration;
  state.x_sum += state.current.x;
  state.y_sum += state.current.y;
  state.ax_sum += state.ax;
  state.aty_sum += state.aty;
  ++state.window;
}

bool restart_if_improved(const LinearProgram& std_lp, PdhgState& state,
                         Scalar avg_maxresid, Scalar restart_factor) {
  if (state.window < 1) return false;
  if (!(avg_maxresid <= restart_factor * state.last_restart_resid))
    return false;
  const Scalar inv = 1.0 / static_cast<Scalar>(state.window);
  state.current.x = state.x_sum * inv;
  state.current.y = state.y_sum * inv;
  state.ax = state.ax_sum * inv;
  state.aty = state.aty_sum * inv;
  state.current.z =
      clipped_reduced_costs(std_lp, state.current.x, state.aty);
  state.x_sum.setZero();
  state.y_sum.setZero();
  state.ax_sum.setZero();
  state.aty_sum.setZero();
  state.window = 0;
  state.last_restart_resid = avg_maxresid;
  ++state.restarts;
  return true;
}

namespace {

// Residual report without fresh matvecs, from cached A x and A' y.
ResidualReport report_from_products(const LinearProgram& lp, const Vector& x,
                                    const Vector& y, const Vector& z,
                                    const Vector& ax, const Vector& aty,
                                    Scalar b_norm, Scalar c_norm) {
  ResidualReport rep;
  Scalar rp2 = 0.0, rp_inf = 0.0;
  for (Index i = 0; i < lp.num_rows(); ++i) {
    Scalar v = 0.0;
    if (ax[i] < lp.row_lower[i]) {
      v = lp.row_lower[i] - ax[i];
    } else if (ax[i] > lp.row_upper[i]) {
      v = ax[i] - lp.row_upper[i];
    }
    rp2 += v * v;
    rp_inf = std::max(rp_inf, v);
  }
  Scalar rd2 = 0.0, rd_inf = 0.0, compl_inf = 0.0, dual_bound_terms = 0.0;
  for (Index j = 0; j < lp.num_cols(); ++j) {
    const Scalar rd = aty[j] + z[j] - lp.c[j];
    rd2 += rd * rd;
    rd_inf = std::max(rd_inf, std::abs(rd));
    const Scalar bv = std::max(
        {lp.col_lower[j] - x[j], x[j] - lp.col_upper[j], 0.0});
    rp_inf = std::max(rp_inf, bv);
    Scalar dist = kInf;
    if (is_finite(lp.col_lower[j]))
      dist = std::min(dist, std::abs(x[j] - lp.col_lower[j]));
    if (is_finite(lp.col_upper[j]))
      dist = std::min(dist, std::abs(x[j] - lp.col_upper[j]));
    if (is_finite(dist)) compl_inf = std::max(compl_inf, dist * std::abs(z[j]));
    if (z[j] > 0.0 && is_finite(lp.col_lower[j])) {
      dual_bound_terms += lp.col_lower[j] * z[j];
    } else if (z[j] < 0.0 && is_finite(lp.col_upper[j])) {
      dual_bound_terms += lp.col_upper[j] * z[j];
    }
  }
  rep.rp_norm2 = std::sqrt(rp2);
  rep.rd_norm2 = std::sqrt(rd2);
  rep.rp_inf = rp_inf;
  rep.rd_inf = rd_inf;
  rep.complementarity = compl_inf;
  rep.primal_objective = lp.c.dot(x);
  rep.dual_objective = lp.row_lower.dot(y) + dual_bound_terms;
  rep.gap_abs = std::abs(rep.primal_objective - rep.dual_objective);
  rep.rel_primal = rep.rp_norm2 / (1.0 + b_norm);
  rep.rel_dual = rep.rd_norm2 / (1.0 + c_norm);
  rep.rel_gap = rep.gap_abs / (1.0 + std::abs(rep.primal_objective) +
                               std::abs(rep.dual_objective));
  rep.maxresid_rel = std::max({rep.rel_primal, rep.rel_dual, rep.rel_gap});
  return rep;
}

struct UnscaledView {
  Iterate iterate;
  Vector ax, aty;
  ResidualReport report;
};

}  // namespace

PdhgResult run_pdhg(const LinearProgram& std_lp, const PdhgConfig& config,
                    const Tolerances& tol,
                    const std::vector<Scalar>& thresholds,
                    const SnapshotSink& sink,
                    const std::atomic<bool>* cancel) {
  if (!std_lp.all_rows_equality()) {
    throw std::invalid_argument("run_pdhg: LP must be in equality form");
  }
  tol.validate();
  for (size_t i = 1; i < thresholds.size(); ++i) {
    if (!(thresholds[i] < thresholds[i - 1])) {
      throw std::invalid_argument(
          "run_pdhg: thresholds must be strictly decreasing");
    }
  }
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&]() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t0)
        .count();
  };

  auto [slp, scaling] = ruiz_scale(std_lp, config.scaling_iterations);
  const Scalar b_norm = std_lp.representative_rhs().norm();
  const Scalar c_norm = std_lp.c.norm();

  PdhgState state = make_initial_state(slp);
  state.norm_estimate =
      estimate_matrix_norm(slp.A, config.norm_iterations, config.seed);
  const Scalar a_norm = state.norm_estimate > 0.0 ? state.norm_estimate : 1.0;
  Scalar omega = config.primal_weight;
  if (omega <= 0.0) {
    const Scalar cs = slp.c.norm();
    const Scalar bs = slp.representative_rhs().norm();
    omega = (cs > 0.0 && bs > 0.0) ? cs / bs : 1.0;
  }
  const Scalar tau = config.step_scale * omega / a_norm;
  const Scalar sigma = config.step_scale / (omega * a_norm);

  // Unscales a scaled-space point and builds its report on the original
  // model. All products come from caches, so this is O(n + m).
  auto view_of = [&](const Vector& xs, const Vector& ys, const Vector& axs,
                     const Vector& atys, std::int64_t k) {
    UnscaledView v;
    v.iterate.x = scaling.unscale_x(xs);
    v.iterate.y = scaling.unscale_y(ys);
    v.ax = axs.cwiseQuotient(scaling.row_scale);
    v.aty = atys.cwiseQuotient(scaling.col_scale);
    v.iterate.z = clipped_reduced_costs(std_lp, v.iterate.x, v.aty);
    v.iterate.k = k;
    v.report = report_from_products(std_lp, v.iterate.x, v.iterate.y,
                                    v.iterate.z, v.ax, v.aty, b_norm, c_norm);
    return v;
  };

  PdhgResult result;
  size_t next_threshold = 0;
  bool have_best = false;
  UnscaledView final_view;

  auto finish = [&](PdhgStopReason reason, const UnscaledView& view) {
    result.stop = reason;
    result.iterate = view.iterate;
    result.report = view.report;
    result.iterations = state.iteration;
    result.restarts = state.restarts;
    result.seconds = elapsed();
    return result;
  };

  while (true) {
    if (cancel != nullptr && cancel->load(std::memory_order_relaxed)) {
      return finish(PdhgStopReason::kCancelled,
                    view_of(state.current.x, state.current.y, state.ax,
                            state.aty, state.iteration));
    }
    if (elapsed() > config.time_limit) {
      return finish(PdhgStopReason::kTimeLimit,
                    view_of(state.current.x, state.current.y, state.ax,
                            state.aty, state.iteration));
    }
    if (state.iteration % config.check_interval == 0) {
      UnscaledView cur = view_of(state.current.x, state.current.y, state.ax,
                                 state.aty, state.iteration);
      bool use_avg = false;
      UnscaledView avg;
      if (state.window > 0) {
        const Scalar inv = 1.0 / static_cast<Scalar>(state.window);
        avg = view_of(state.x_sum * inv, state.y_sum * inv,
                      state.ax_sum * inv, state.aty_sum * inv,
                      state.iteration);
        use_avg = avg.report.maxresid_rel < cur.report.maxresid_rel;
      }
      const UnscaledView& better = use_avg ? avg : cur;
      if (!have_best ||
          better.report.maxresid_rel < state.best.maxresid_rel) {
        state.best = better.report;
        have_best = true;
      }
      if (state.last_restart_resid == kInf) {
        state.last_restart_resid = cur.report.maxresid_rel;
      }
      if (config.log_interval > 0 && config.log != nullptr &&
          state.iteration % config.log_interval == 0) {
        char line[160];
        std::snprintf(line, sizeof line, "%lld\t%.6e\t%.6e\t%.6e\t%.3f\n",
                      static_cast<long long>(state.iteration),
                      better.report.rel_primal, better.report.rel_dual,
                      better.report.rel_gap, elapsed());
        (*config.log) << line << std::flush;
      }
      // Convergence precedes the launch test; a residual that jumps
      // straight below eps_rel never launches a worker.
      if (better.report.maxresid_rel <= tol.eps_rel) {
        return finish(PdhgStopReason::kConverged, better);
      }
      if (next_threshold < thresholds.size() &&
          better.report.maxresid_rel <= thresholds[next_threshold]) {
        if (sink) {
          PdhgSnapshot snap;
          snap.iterate = better.iterate;
          snap.threshold = thresholds[next_threshold];
          snap.maxresid = better.report.maxresid_rel;
          snap.from_average = use_avg;
          snap.iteration = state.iteration;
          sink(snap);
        }
        ++next_threshold;  // one launch per check, as in the loop body
      }
      if (state.window > 0) {
        restart_if_improved(slp, state, avg.report.maxresid_rel,
                            config.restart_factor);
      }
    }
    if (state.iteration >= config.max_iterations) {
      return finish(PdhgStopReason::kIterationLimit,
                    view_of(state.current.x, state.current.y, state.ax,
                            state.aty, state.iteration));
    }
    try {
      pdhg_step(slp, state, tau, sigma);
    } catch (const PdhgNumericalError& err) {
      result.error_iteration = err.iteration();
      return finish(PdhgStopReason::kNumericalError,
                    view_of(state.current.x, state.current.y, state.ax,
                            state.aty, state.iteration));
    }
  }
}

}  // namespace cclp
