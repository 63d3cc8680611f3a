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

#ifndef CCLP_TYPES_HPP_
#define CCLP_TYPES_HPP_

#include <cstdint>
#include <limits>

#include "Eigen/Core"
#include "Eigen/SparseCore"

namespace cclp {

using Scalar = double;
using Index = int;

using Vector = Eigen::VectorXd;
// Column-major compressed storage: per-column offsets, sorted row indices,
// values. Explicit zeros are pruned wherever matrices are assembled.
using SparseMat = Eigen::SparseMatrix<Scalar, Eigen::ColMajor, Index>;

// Sentinel for absent bounds. IEEE infinity is distinct from every finite
// magnitude and behaves correctly under min/max and comparisons.
inline constexpr Scalar kInf = std::numeric_limits<Scalar>::infinity();

inline bool is_finite(Scalar v) { return v > -kInf && v < kInf; }

}  // namespace cclp

#endif  // CCLP_TYPES_HPP_
