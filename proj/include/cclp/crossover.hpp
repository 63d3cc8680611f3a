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

#ifndef CCLP_CROSSOVER_HPP_
#define CCLP_CROSSOVER_HPP_

#include <string>
#include <vector>

#include "cclp/simplex.hpp"

namespace cclp {

enum class CrossoverStatus {
  kSuccess,
  kCancelled,
  kIterationLimit,
  kTimeLimit,
  kInfeasible,
  kUnbounded,
  kNumericalError,
  kVerifyFailed,
};

const char* to_string(CrossoverStatus status);

enum class PartitionLabel : char {
  kCandidateBasic = 'C',
  kAtLower = 'L',
  kAtUpper = 'U',
};

// Complementarity-guided column split: columns whose reduced cost dominates
// their distance to the nearest bound are snapped to that bound, interior
// columns with small |z| become basis candidates. Candidates are ranked by
// interiorness (bound distance scaled by column norm), ties by smaller |z|,
// then by lower index.
struct Partition {
  std::vector<PartitionLabel> label;  // engine columns
  std::vector<Index> candidates;      // ranked engine column indices
};

Partition guess_partition(const LinearProgram& std_lp, const Iterate& snapshot,
                          Scalar eps);

// Crash basis from a partition: candidates enter in rank order while they
// keep the factors nonsingular, logical columns fill whatever remains. Never
// fails structurally.
Basis build_basis(const LinearProgram& std_lp, const Partition& partition);

struct CrossoverTask {
  const LinearProgram* std_lp = nullptr;
  Iterate snapshot;               // standard-form space
  Scalar launch_threshold = 0.0;  // maxresid at launch
  Tolerances tol;
  SimplexOptions simplex;  // carries the cancel flag and limits
};

struct CrossoverResult {
  CrossoverStatus status = CrossoverStatus::kNumericalError;
  Basis basis;
  Iterate iterate;  // standard-form space, recomputed from the basis
  Scalar abs_violation = kInf;
  std::int64_t cleanup_pivots = 0;
  Scalar seconds = 0.0;
  Scalar launch_threshold = 0.0;

  std::string to_json() const;
};

// guess_partition -> build_basis -> primal simplex cleanup -> verification.
// Success means verify_basic_optimal accepted the final basis at
// tol.eps_abs; everything else reports the failing stage with partial
// statistics.
CrossoverResult run_crossover(const CrossoverTask& task);

struct VerifyOutcome {
  bool ok = false;
  Iterate iterate;  // recomputed from the basis alone (standard-form space)
  Scalar violation = kInf;
  std::string diagnostic;
};

// Recomputes x_B, y, z from (lp, basis) alone and checks primal feasibility,
// reduced-cost sign feasibility, and row residuals at eps_abs. Nonbasic
// columns sit exactly on their bounds, so complementarity is exact by
// construction. Independent of any iterate that produced the basis.
VerifyOutcome verify_basic_optimal(const LinearProgram& std_lp,
                                   const Basis& basis, Scalar eps_abs);

}  // namespace cclp

#endif  // CCLP_CROSSOVER_HPP_
