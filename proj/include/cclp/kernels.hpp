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

#ifndef CCLP_KERNELS_HPP_
#define CCLP_KERNELS_HPP_

#include <stdexcept>

#include "cclp/types.hpp"

namespace cclp {

// Sparse kernels shared by every solver. Both products run sequentially in
// column order, so results are deterministic and the adjoint identity
// y.(Ax) == (A'y).x holds to roundoff.

inline Vector matvec(const SparseMat& A, const Eigen::Ref<const Vector>& x) {
  if (x.size() != A.cols()) {
    throw std::invalid_argument("matvec: vector length != ncols");
  }
  return A * x;
}

inline Vector matvec_transpose(const SparseMat& A,
                               const Eigen::Ref<const Vector>& y) {
  if (y.size() != A.rows()) {
    throw std::invalid_argument("matvec_transpose: vector length != nrows");
  }
  return A.transpose() * y;
}

// Assembles a compressed, sorted, zero-pruned matrix from triplets.
// Duplicate (row, col) entries are summed.
SparseMat make_sparse(Index nrows, Index ncols,
                      const std::vector<Eigen::Triplet<Scalar>>& entries);

}  // namespace cclp

#endif  // CCLP_KERNELS_HPP_
