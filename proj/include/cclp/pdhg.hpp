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

#ifndef CCLP_PDHG_HPP_
#define CCLP_PDHG_HPP_

#include <atomic>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "cclp/kkt.hpp"
#include "cclp/lp.hpp"

namespace cclp {

struct PdhgConfig {
  Scalar step_scale = 0.9;     // eta in (0, 1]; tau*sigma*||A||^2 = eta^2
  Scalar primal_weight = 0.0;  // omega > 0; 0 picks ||c|| / ||b||
  Scalar restart_factor = 0.5;  // average must beat the last restart by this
  int norm_iterations = 100;    // power-method iterations for ||A||
  int scaling_iterations = 10;  // Ruiz passes before iterating
  std::int64_t max_iterations = 2000000;
  Scalar time_limit = kInf;    // seconds
  int check_interval = 1;      // residual/termination checks every k steps
  std::uint64_t seed = 0;      // power-method start vector
  std::int64_t log_interval = 0;  // 0 disables the iteration log
  std::ostream* log = nullptr;
  bool deterministic = true;   // kernels keep a fixed summation order
};

enum class PdhgStopReason {
  kConverged,
  kIterationLimit,
  kTimeLimit,
  kCancelled,
  kWonByCrossover,  // cancelled because a crossover worker already won
  kNumericalError,
};

const char* to_string(PdhgStopReason reason);

// Raised by pdhg_step when an iterate goes non-finite.
class PdhgNumericalError : public std::runtime_error {
 public:
  explicit PdhgNumericalError(std::int64_t iteration)
      : std::runtime_error("PDHG produced a non-finite iterate at iteration " +
                           std::to_string(iteration)),
        iteration_(iteration) {}
  std::int64_t iteration() const { return iteration_; }

 private:
  std::int64_t iteration_;
};

// Iteration state over a (usually scaled) equality-form LP. The running
// average restarts the iteration when it improves enough; its matrix
// products are tracked as sums, so average residuals cost no extra matvec.
struct PdhgState {
  Iterate current;
  Vector ax, aty;  // A x_k and A' y_k
  Vector x_sum, y_sum, ax_sum, aty_sum;
  std::int64_t window = 0;  // iterates accumulated since the last restart
  Scalar last_restart_resid = kInf;
  std::int64_t iteration = 0;
  std::int64_t restarts = 0;
  Scalar norm_estimate = 0.0;
  ResidualReport best;
};

// Largest singular value by power iteration on A'A, deterministic for a
// fixed seed. Returns 0 for an empty or all-zero matrix.
Scalar estimate_matrix_norm(const SparseMat& A, int iterations,
                            std::uint64_t seed);

// Fresh state at x = proj(0), y = 0 (z derived from y).
PdhgState make_initial_state(const LinearProgram& std_lp);

// Recomputes the cached products and z after the iterate was edited.
void refresh_products(const LinearProgram& std_lp, PdhgState& state);

// One PDHG update:
//   x+ = proj_[l,u](x - tau (c - A'y))
//   y+ = y + sigma (b - A (2 x+ - x))
//   z+ = c - A'y+, clipped to the sign admissible at the nearest bound
// and the average window is extended. Throws PdhgNumericalError if any
// component goes non-finite.
void pdhg_step(const LinearProgram& std_lp, PdhgState& state, Scalar tau,
               Scalar sigma);

// Applies an average-iterate restart when the average residual improved by
// restart_factor over the residual at the last restart. avg_maxresid is the
// caller-computed maxresid of the running average. Returns true if it fired.
bool restart_if_improved(const LinearProgram& std_lp, PdhgState& state,
                         Scalar avg_maxresid, Scalar restart_factor);

// Iterate snapshot crossing a registered residual threshold, handed to the
// crossover side by value.
struct PdhgSnapshot {
  Iterate iterate;  // unscaled, standard-form space
  Scalar threshold = 0.0;
  Scalar maxresid = 0.0;
  bool from_average = false;
  std::int64_t iteration = 0;
};

using SnapshotSink = std::function<void(const PdhgSnapshot&)>;

struct PdhgResult {
  Iterate iterate;  // unscaled, standard-form space
  ResidualReport report;
  PdhgStopReason stop = PdhgStopReason::kIterationLimit;
  std::int64_t iterations = 0;
  std::int64_t restarts = 0;
  Scalar seconds = 0.0;
  std::int64_t error_iteration = -1;
};

// Runs scaled PDHG on an equality-form LP until the relative criteria hold
// at tol.eps_rel, or a limit / cancellation hits. Residuals are always
// measured on the unscaled model. `thresholds` must be strictly decreasing;
// the first time the residual reaches thresholds[i] (checked from the
// largest down, at most one per check), `sink` receives a snapshot tagged
// with that threshold. The convergence test precedes the snapshot test, so
// a residual that plunges straight past eps_rel launches nothing.
PdhgResult run_pdhg(const LinearProgram& std_lp, const PdhgConfig& config,
                    const Tolerances& tol,
                    const std::vector<Scalar>& thresholds = {},
                    const SnapshotSink& sink = nullptr,
                    const std::atomic<bool>* cancel = nullptr);

}  // namespace cclp

#endif  // CCLP_PDHG_HPP_
