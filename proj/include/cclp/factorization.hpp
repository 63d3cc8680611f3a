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

#ifndef CCLP_FACTORIZATION_HPP_
#define CCLP_FACTORIZATION_HPP_

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "Eigen/SparseLU"
#include "cclp/basis.hpp"

namespace cclp {

class SingularBasisError : public std::runtime_error {
 public:
  SingularBasisError(const std::string& message,
                     std::vector<Index> dependent_columns)
      : std::runtime_error(message),
        dependent_columns_(std::move(dependent_columns)) {}
  // Engine column indices forming a dependent set.
  const std::vector<Index>& dependent_columns() const {
    return dependent_columns_;
  }

 private:
  std::vector<Index> dependent_columns_;
};

// LU factors of a basis matrix with product-form updates: a refactorized
// SparseLU base plus one eta vector per pivot since. ftran/btran cost one
// sparse solve plus O(m) per eta.
class FactorizedBasis {
 public:
  // Throws SingularBasisError naming a dependent column set.
  FactorizedBasis(const EngineModel& model, const std::vector<Index>& basic);

  Index dim() const { return dim_; }

  Vector ftran(const Eigen::Ref<const Vector>& v) const;  // B^{-1} v
  Vector btran(const Eigen::Ref<const Vector>& v) const;  // B^{-T} v

  // Records the basis change "column at position slot replaced by a column
  // a with ftran(a) == w". w[slot] must be safely away from zero.
  void update(Index slot, Vector w);

  int updates() const { return static_cast<int>(etas_.size()); }
  int refactorizations() const { return refactor_count_; }
  void set_refactorizations(int n) { refactor_count_ = n; }

  // Growth of one pseudo-random solve, a cheap ill-conditioning signal.
  Scalar condition_indicator() const { return cond_; }

 private:
  std::unique_ptr<Eigen::SparseLU<SparseMat, Eigen::COLAMDOrdering<Index>>>
      lu_;
  std::vector<std::pair<Index, Vector>> etas_;
  Index dim_ = 0;
  int refactor_count_ = 0;
  Scalar cond_ = 0.0;
};

// Positions in `basic` (not engine indices) that fail to receive a pivot in
// a dense rank-revealing elimination; empty means nonsingular. Used to name
// the offending columns when SparseLU declines to factorize.
std::vector<Index> dependent_positions(const EngineModel& model,
                                       const std::vector<Index>& basic,
                                       Scalar tol = 1e-10);

}  // namespace cclp

#endif  // CCLP_FACTORIZATION_HPP_
