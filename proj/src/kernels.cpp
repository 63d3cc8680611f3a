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

#include "cclp/kernels.hpp"

#include <vector>

namespace cclp {

SparseMat make_sparse(Index nrows, Index ncols,
                      const std::vector<Eigen::Triplet<Scalar>>& entries) {
  SparseMat A(nrows, ncols);
  A.setFromTriplets(entries.begin(), entries.end());
  A.prune(0.0, 0.0);  // exact zeros only
  A.makeCompressed();
  return A;
}

}  // namespace cclp
