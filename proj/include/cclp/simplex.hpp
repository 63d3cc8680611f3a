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

#ifndef CCLP_SIMPLEX_HPP_
#define CCLP_SIMPLEX_HPP_

#include <atomic>
#include <cstdint>
#include <vector>

#include "cclp/factorization.hpp"
#include "cclp/kkt.hpp"

namespace cclp {

enum class SimplexStatus {
  kOptimal,
  kIterationLimit,
  kCancelled,
  kTimeLimit,
  kInfeasible,
  kUnbounded,
  kNumericalError,
};

const char* to_string(SimplexStatus status);

struct SimplexOptions {
  Scalar eps_abs = 1e-6;      // verification tolerance on the result
  std::int64_t max_pivots = 200000;
  int refactor_interval = 64;
  int degenerate_switch = 100;  // consecutive degenerate pivots before Bland
  Scalar time_limit = kInf;     // seconds
  const std::atomic<bool>* cancel = nullptr;  // polled at pivot boundaries
  std::vector<Scalar>* objective_trace = nullptr;  // phase-2 values, for tests
};

struct SimplexResult {
  SimplexStatus status = SimplexStatus::kNumericalError;
  Basis basis;
  Iterate iterate;  // standard-form space: x, y = B^{-T} c_B, z = c - A'y
  std::int64_t pivots = 0;
  std::int64_t phase1_pivots = 0;
  std::int64_t bound_flips = 0;
  int refactorizations = 0;
  Scalar max_basic_drift = 0.0;  // recomputed-vs-updated x_B disagreement
  Scalar seconds = 0.0;
};

// Outcome of the bounded-variable ratio test along an entering direction.
struct RatioOutcome {
  enum Kind { kLeaves, kBoundFlip, kUnbounded } kind = kUnbounded;
  Index leaving_pos = -1;  // position in basic[], for kLeaves
  Scalar step = 0.0;       // t* >= 0
  ColStatus leaving_to = ColStatus::kAtLower;
};

// Min-ratio scan for the entering column moving by `direction` (+1/-1) with
// basics changing as x_B - t * direction * w. Basics block at the first
// bound they reach (including an out-of-bounds basic reaching the bound it
// violates); the entering column's own opposite bound competes as a bound
// flip. Ties prefer the bound flip, then the largest |w| (or the smallest
// index under Bland's rule).
RatioOutcome ratio_test(const EngineModel& model, const Basis& basis,
                        const Vector& x, Index entering, int direction,
                        const Vector& w, Scalar feas_tol, bool bland);

// Two-phase bounded-variable primal simplex from a structurally valid start
// basis. Phase 1 minimizes total primal infeasibility with the same pivot
// machinery (no big-M); phase 2 follows with Dantzig pricing, switching to
// Bland's rule after a run of degenerate pivots. On kOptimal the iterate is
// primal feasible and sign-feasible within eps_abs.
SimplexResult primal_simplex(const LinearProgram& std_lp, const Basis& start,
                             const SimplexOptions& options = {});

}  // namespace cclp

#endif  // CCLP_SIMPLEX_HPP_
